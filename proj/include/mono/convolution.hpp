#pragma once

#include <random>
#include <vector>

#include "mono/group_function.hpp"
#include "mono/hyperhecke.hpp"
#include "mono/rep.hpp"

namespace mono {

// Counting-measure convolution: (a * b)(g) = sum_h a(h) b(h^-1 g).
GroupFunction convolve(const GroupFunction& a, const GroupFunction& b);
// The same product summed as sum_h a(g h) b(h^-1).
GroupFunction convolve_right_form(const GroupFunction& a, const GroupFunction& b);
// T(f)(x) = f(x^-1)
GroupFunction involution(const GroupFunction& f);
// (1/|K|) chi_K
GroupFunction subgroup_idempotent(const Subgroup& k);

// For a valid triple [(K, psi), g, (H, phi)]: v runs over K/Ker(psi) and u
// over H/(gKg^-1 Ker(phi)), so the products (g v g^-1) u run over
// H/Ker(phi).
struct CosetChoice {
  std::vector<int> v;
  std::vector<int> u;
};
CosetChoice minimal_coset_choice(const Triple& t);
CosetChoice random_coset_choice(const Triple& t, std::mt19937_64& rng);

// AsWritten weights chi_{g^-1 Ker(phi) u} by phi(u); Conjugated by phi(u)^-1.
// Only the conjugated weights turn the convolution identity into an
// equality when phi takes values other than +-1 on the u.
enum class PhiWeights { AsWritten, Conjugated };
// sum_u weight(u) chi_{g^-1 Ker(phi) u}. Throws InvalidTriple.
GroupFunction phi_element(const Triple& t, const CosetChoice& choice, PhiWeights weights = PhiWeights::AsWritten);

// sum_j psi(v_j) chi_{Ker(psi) v_j g1^-1}, which equals g1.f_(K,psi).
GroupFunction translated_pair_function_expansion(const CharPair& pair, const std::vector<int>& v, int g1);

struct TranslationCheck {
  GroupFunction expected;  // (g1 g^-1).f_(H,phi)
  GroupFunction computed;  // (1/|Ker psi|) T(T(g1.f_(K,psi)) * Phi)
  bool expansion_matches = false;  // the v-expansion equals g1.f_(K,psi)
  bool holds = false;
};
// The triple applied to g1.f_(K,psi), against its convolution expression.
TranslationCheck translation_formula_check(const Triple& t, int g1, const CosetChoice& choice,
                                           PhiWeights weights = PhiWeights::Conjugated);

// sum_g f(g) rho(g)
Matrix pi_of_phi(const MatrixRep& rho, const GroupFunction& f);
// trace(pi_of_phi(rho, f))
CycloScalar trace_distribution(const MatrixRep& rho, const GroupFunction& f);

}  // namespace mono
