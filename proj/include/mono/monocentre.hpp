#pragma once

#include <optional>
#include <vector>

#include "mono/hyperhecke.hpp"

namespace mono {

// One coset x_p Ker(phi_p) inside stab(p)/Ker(phi_p) for every pair p of a
// poset, stored as the least element of each coset.
struct MonoFamily {
  std::vector<int> representatives;
  friend bool operator==(const MonoFamily&, const MonoFamily&) = default;
  friend bool operator<(const MonoFamily& a, const MonoFamily& b) { return a.representatives < b.representatives; }
};

// For the valid triple t from (K, psi) to (H, phi): g x_K g^-1 lies in
// stab(H, phi) and agrees with x_H modulo Ker(phi).
bool monocentre_condition(const PairPoset& poset, const TripleKey& t, int x_source, int x_target);
// Condition over every valid triple (every g, not only canonical ones).
bool family_in_monocentre(const PairPoset& poset, const MonoFamily& family);
// x_p = x Ker(phi_p) for all p; empty when x misses some stabilizer.
std::optional<MonoFamily> family_from_element(const PairPoset& poset, int x);
MonoFamily identity_family(const PairPoset& poset);
MonoFamily family_product(const PairPoset& poset, const MonoFamily& a, const MonoFamily& b);

struct MonocentreReport {
  std::vector<MonoFamily> families;      // sorted; the identity family first
  std::vector<std::vector<int>> table;   // family indices under componentwise product
  bool closed = false;                   // products stay inside the set
  bool abelian = false;
  std::vector<int> invariants;           // abelian invariants when closed
  std::vector<int> element_family;       // family index of x in G, -1 if x yields none
  int order() const { return static_cast<int>(families.size()); }
};

// Candidates come from G/Ker(central), then each is checked against the full
// condition.
MonocentreReport monocentre(const PairPoset& poset);
// Independent search over every assignment of cosets. Requires |G| <= 8 and
// at most 10^6 assignments, otherwise TooLarge.
std::vector<MonoFamily> monocentre_exhaustive(const PairPoset& poset);

// t * [(K,psi), x_K, (K,psi)] == [(H,phi), x_H, (H,phi)] * t
bool family_commutes_with_triple(const HyperHeckeAlgebra& algebra, const MonoFamily& family, const TripleKey& t);

}  // namespace mono
