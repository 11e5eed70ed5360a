#pragma once

#include <string>
#include <vector>

#include "mono/character.hpp"
#include "mono/linalg.hpp"
#include "mono/monomial.hpp"

namespace mono {

// Group homomorphism into GL_n(Q(zeta_N)), one dense matrix per element.
class MatrixRep {
 public:
  // Validates rho(a) rho(b) = rho(ab) on all pairs.
  MatrixRep(FiniteGroup group, std::vector<Matrix> images, std::string name = "");
  // Extends generator images along words; fails with Precondition when the
  // images do not define a homomorphism.
  static MatrixRep from_generators(const FiniteGroup& group, const std::vector<int>& generators,
                                   const std::vector<Matrix>& images, std::string name = "");

  const FiniteGroup& group() const { return group_; }
  size_t dim() const { return images_.front().rows(); }
  const Matrix& operator()(int g) const { return images_[g]; }
  const std::string& name() const { return name_; }
  // The character by which Z(G) acts, if it acts by scalars.
  std::optional<Character> central_character() const;

 private:
  FiniteGroup group_;
  std::vector<Matrix> images_;
  std::string name_;
};

// V^(H, phi) = {v : h v = phi(h) v for h in H}.
Subspace fixed_points(const MatrixRep& v, const Character& pair);

MatrixRep trivial_rep(const FiniteGroup& group);
MatrixRep character_rep(const Character& chi);
MatrixRep regular_rep(const FiniteGroup& group);
// The part of the regular representation on which Z(G) acts through the
// given central character; equal to Ind from Z(G).
MatrixRep isotypic_regular_rep(const FiniteGroup& group, const Character& central);
// g -> rho(g^-1)^T
MatrixRep contragredient(const MatrixRep& rho);
MatrixRep monomial_to_matrix(const MonomialModule& module);
// Linear characters first, then the known higher-dimensional irreducibles
// for dihedral, quaternion and small symmetric and alternating groups.
std::vector<MatrixRep> irreducible_catalog(const FiniteGroup& group);
// "trivial", "regular" (isotypic), "irrep:k", "char:k", or a JSON file.
MatrixRep resolve_rep(const FiniteGroup& group, const Character& central, const std::string& tag);
MatrixRep rep_from_json(const FiniteGroup& group, const nlohmann::json& doc);

// dim Hom_G(A, B) via the intertwiner equations.
size_t intertwiner_dimension(const MatrixRep& a, const MatrixRep& b);
bool reps_equal(const MatrixRep& a, const MatrixRep& b);

struct FrobeniusReport {
  size_t hom_dimension = 0;    // dim Hom_G(Ind_H phi, V)
  size_t fixed_dimension = 0;  // dim V^(H, phi)
  bool holds = false;
};
// Throws CentralCharacterMismatch when Z(G) does not act on V as phi does.
FrobeniusReport frobenius_reciprocity_check(const CharPair& pair, const MatrixRep& v);

}  // namespace mono
