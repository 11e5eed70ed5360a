#pragma once

#include <vector>

#include "mono/group_function.hpp"
#include "mono/hyperhecke.hpp"
#include "mono/linalg.hpp"

namespace mono {

struct LineAction {
  int line;
  CycloScalar scalar;
};

// Which summand a line came from and the coset representative naming it.
struct LineLabel {
  int summand;
  int representative;
};

// Module with a chosen decomposition into lines permuted by the acting
// subgroup up to roots of unity. Line maps between such modules are sparse
// matrices (target lines x source lines).
class MonomialModule {
 public:
  // action[i][line] gives the image under acting.elements()[i]. Validated:
  // identity acts trivially and the action composes.
  MonomialModule(Subgroup acting, std::vector<LineLabel> labels, std::vector<std::vector<LineAction>> action);

  const Subgroup& acting() const { return acting_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const LineLabel& label(int line) const { return labels_[line]; }
  const LineAction& act(int g, int line) const;
  // (stabilizer of the line, character through which it acts)
  const Character& stabilizing_pair(int line) const { return stabilizing_[line]; }
  SparseMatrix action_matrix(int g) const;

 private:
  Subgroup acting_;
  std::vector<LineLabel> labels_;
  std::vector<std::vector<LineAction>> action_;
  std::vector<Character> stabilizing_;
};

// Ind from phi's domain L up to the acting subgroup J. Lines are the left
// cosets cL named by their least element, in increasing order; j.(c x 1) =
// c' x phi(l) where j c = c' l.
MonomialModule induced_module(const Subgroup& acting, const Character& phi);
MonomialModule induced_module(const CharPair& pair);
MonomialModule direct_sum(const std::vector<MonomialModule>& summands);
MonomialModule restriction(const MonomialModule& module, const Subgroup& j);

// Lines whose stabilizing pair dominates the given pair.
std::vector<int> lineable_fixed_points(const MonomialModule& module, const Character& pair);

// Line map Ind_K(psi) -> Ind_H(phi), g' x v -> g' g^-1 x v. Throws
// InvalidTriple.
SparseMatrix triple_morphism(const Triple& t);
bool is_equivariant(const MonomialModule& source, const MonomialModule& target, const SparseMatrix& map);
// Every line lands in the span of lines whose stabilizing pairs dominate its own.
bool preserves_lineable_fixed_points(const MonomialModule& source, const MonomialModule& target,
                                     const SparseMatrix& map);

// One morphism Ind(pair) -> N per lineable fixed line n, sending g x v to v g.e_n.
std::vector<SparseMatrix> hom_via_fixed_points(const CharPair& pair, const MonomialModule& target);
// Image of the generator 1 x 1 (line 0 of an induced module), as a column on the target lines.
std::vector<CycloScalar> value_at_generator(const SparseMatrix& map, int conductor);

// One entry per orbit of lines: the least pair in the orbit of its
// stabilizing pair. Sorted.
std::vector<Character> orbit_decomposition(const MonomialModule& module);

// Functions supported on H d for right cosets H d, with basis functions
// f_d(h d) = phi(h); G acts by (g.f)(x) = f(x g).
class FunctionModel {
 public:
  explicit FunctionModel(const CharPair& pair);
  const CharPair& pair() const { return pair_; }
  const std::vector<int>& representatives() const { return reps_; }
  const std::vector<GroupFunction>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  bool contains(const GroupFunction& f) const;
  // Coordinates are the values at the representatives.
  std::vector<CycloScalar> coordinates(const GroupFunction& f) const;
  Matrix action_matrix(int g) const;
  // Matrix of g x w -> g.f_w from the line basis of induced_module(pair).
  Matrix bridge() const;

 private:
  CharPair pair_;
  std::vector<int> reps_;
  std::vector<GroupFunction> basis_;
};

// g1.f_(K,psi) -> (g1 g^-1).f_(H,phi), in function-model coordinates.
Matrix function_model_morphism(const Triple& t);

// Res_J Ind_H(phi) against the sum over z in J\G/H of Ind_{J cap zHz^-1}^J
// of x -> phi(z^-1 x z).
struct DoubleCosetDecomposition {
  std::vector<int> representatives;
  std::vector<Character> summand_characters;
  MonomialModule restricted;
  MonomialModule decomposed;
  SparseMatrix forward;   // g x v -> j x phi(h)v for g = j z h
  SparseMatrix backward;  // j x v -> j z x v
};
DoubleCosetDecomposition double_coset_formula(const Subgroup& j, const Character& phi);
// forward is J-equivariant and the two maps are mutually inverse.
bool verify_double_coset_formula(const DoubleCosetDecomposition& decomposition);

}  // namespace mono
