#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mono/chain.hpp"
#include "mono/monocentre.hpp"
#include "mono/monomial.hpp"
#include "mono/rep.hpp"

namespace mono {

enum class SMode { Full, Orbit };

// Column guard for terms and for exact elimination; MONO_MAX_DIM overrides
// the default of 4000.
size_t default_max_dim();

struct ResolutionRequest {
  FiniteGroup group;
  Character central;
  MatrixRep v;
  SMode mode = SMode::Orbit;
  int max_degree = 2;
  size_t max_dim = default_max_dim();
  // Lists the summands of S and the basis of A_S backwards; the complex
  // changes but its ranks and homology must not.
  bool reverse_order = false;
};

// Orbit mode above order 4, full mode otherwise.
SMode default_s_mode(const FiniteGroup& group);

// Sum of Ind(p) over the chosen pairs, in the given order.
MonomialModule build_S(const PairPoset& poset, const std::vector<int>& pairs);
std::vector<int> s_pairs(const PairPoset& poset, SMode mode);

// Term i has basis f_b x a_1 x ... x a_i x l: b indexes a basis of the
// fixed points V^(p) of the summands p of S, a_j the canonical triples
// between summands and l the lines of S. Index (b a^i + sum a_j a^(i-j)) s + l.
struct BarResolution {
  std::shared_ptr<const PairPoset> poset;
  std::shared_ptr<const HyperHeckeAlgebra> algebra;
  MatrixRep v;
  SMode mode;
  std::vector<int> summand_pairs;        // poset id per summand of S
  MonomialModule s_module;
  std::vector<int> line_summand;         // summand of each line of S
  std::vector<int> line_pair;            // poset id of each line's stabilizing pair
  std::vector<TripleKey> as_basis;
  std::vector<Subspace> fixed_bases;     // V^(p) per summand
  std::vector<int> generator_summand;    // summand of f_b
  std::vector<size_t> generator_column;  // basis column of f_b in its fixed space
  size_t h = 0, a = 0, s = 0;
  ChainComplex complex;                  // terms 0..max_degree, augmentation onto V

  int max_degree() const { return static_cast<int>(complex.dims.size()) - 1; }
  // Positions of the basis vectors of term i whose line lies over a pair
  // dominating the given one.
  std::vector<size_t> fixed_columns(int degree, int pair) const;
};

// Throws TooLarge when a term exceeds request.max_dim and
// CentralCharacterMismatch when Z(G) acts on V differently.
BarResolution build_resolution(const ResolutionRequest& request);

struct PairExactness {
  int pair = 0;
  size_t fixed_target_dim = 0;  // dim V^(p)
  ExactnessReport report;
};

struct ResolutionCheck {
  bool is_complex = false;          // d o d = 0 and eps o d_0 = 0, exactly
  bool morphisms = false;           // each map is equivariant and keeps lineable fixed points
  bool augmentation_fixed = false;  // eps sends C_0^((p)) into V^(p) for every p
  int through_degree = 0;
  std::vector<PairExactness> pairs;
  bool exact = false;
};
// Exactness of every fixed-point subcomplex C^((p)) -> V^(p), checked at V
// and at C_0 .. C_(d-1), so terms 0..d must be built.
ResolutionCheck check_monomial_resolution(const BarResolution& r, int through_degree,
                                          const ExactnessOptions& options = {});

// Ranks and fixed-point homology per pair; equal for resolutions of the
// same V built with different basis orders.
struct HomologyInvariants {
  std::vector<std::vector<size_t>> ranks;     // per pair, per degree: rank of the outgoing map
  std::vector<std::vector<size_t>> homology;  // per pair, per degree: kernel minus image
  friend bool operator==(const HomologyInvariants&, const HomologyInvariants&) = default;
};
HomologyInvariants homology_invariants(const ResolutionCheck& check);

struct ChainMapReport {
  std::vector<SparseMatrix> components;  // z_i on C_i
  std::vector<bool> commutes;            // z_i d_i = d_i z_(i+1)
  Matrix on_v;                           // Z_V with Z_V eps = eps z_0
  bool augmentation_commutes = false;    // some Z_V exists
  bool equivariant_on_v = false;         // Z_V commutes with the G action
  std::optional<CycloScalar> scalar;     // when Z_V is a multiple of the identity
  bool all_commute = false;
};
// id x z_S on every term, where z_S acts on the summand Ind(p) by the
// triple [p, x_p, p]. Throws FamilyNotInMonocentre.
ChainMapReport monocentre_chain_map(const BarResolution& r, const MonoFamily& family, int through_degree = 1);

}  // namespace mono
