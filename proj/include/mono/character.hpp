#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mono/cyclotomic.hpp"
#include "mono/group.hpp"

namespace mono {

// Linear character of a subgroup. Values are roots of unity of order dividing
// the exponent N of the parent group, stored as powers of zeta_N.
class Character {
 public:
  // powers[g] is consulted only for g in the domain. Throws Precondition if
  // the assignment is not a homomorphism.
  Character(Subgroup domain, std::vector<int> powers);
  static Character trivial(const Subgroup& domain);

  const Subgroup& domain() const { return domain_; }
  const FiniteGroup& group() const { return domain_.group(); }
  int conductor() const { return domain_.group().exponent(); }
  int power(int h) const;
  CycloScalar value(int h) const { return CycloScalar::root_of_unity(conductor(), power(h)); }
  // Powers listed in the order of domain().elements().
  std::vector<int> value_powers() const;
  bool is_trivial() const;
  Subgroup kernel() const;

  Character operator*(const Character& other) const;
  Character inverse() const;

  friend bool operator==(const Character& a, const Character& b);
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
  // Domain first, then lexicographic on value_powers().
  friend bool operator<(const Character& a, const Character& b);

 private:
  Character(Subgroup domain, std::shared_ptr<const std::vector<int>> powers)
      : domain_(std::move(domain)), powers_(std::move(powers)) {}
  Subgroup domain_;
  std::shared_ptr<const std::vector<int>> powers_;  // indexed by element; -1 off the domain
};

// A character pair (H, phi) is a character whose domain H contains Z(G).
using CharPair = Character;

// All linear characters of H, read off from the cyclic decomposition of
// H/[H,H]; sorted lexicographically, trivial first.
std::vector<Character> characters(const Subgroup& h);
// Cyclic decomposition of H/N for normal N with abelian quotient: pairs of
// (element, order of its image), whose images form a basis of H/N.
std::vector<std::pair<int, int>> abelian_quotient_basis(const Subgroup& h, const Subgroup& n);
// Invariant factors of the abelianization of H, ascending and each dividing
// the next.
std::vector<int> abelian_invariants(const Subgroup& h);

// Throws NotASubgroup unless k is contained in the domain.
Character restrict(const Character& phi, const Subgroup& k);
// Domain g^-1 H g, value at k is phi(g k g^-1).
Character conj_character(int g, const Character& phi);
// g.(H, phi) = (gHg^-1, h -> phi(g^-1 h g)).
Character act(int g, const Character& phi);
// (K, psi) <= (H, phi): K inside H and phi restricts to psi.
bool pair_leq(const CharPair& lower, const CharPair& upper);
// Elements z with z.(K, psi) = (K, psi).
Subgroup stabilizer(const CharPair& pair);

std::vector<Character> central_characters(const FiniteGroup& group);
// "trivial" or a decimal index into central_characters().
Character central_character_by_tag(const FiniteGroup& group, const std::string& tag);
std::vector<CharPair> pairs_poset(const FiniteGroup& group, const Character& central);

// Indexed view of the pairs with a fixed central character, with the order
// relation, the conjugation action and per-pair data precomputed.
class PairPoset {
 public:
  PairPoset(FiniteGroup group, Character central);

  const FiniteGroup& group() const { return group_; }
  const Character& central() const { return central_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const CharPair& pair(int id) const { return pairs_[id]; }
  const std::vector<CharPair>& pairs() const { return pairs_; }
  // Throws Precondition for a pair outside the poset.
  int id_of(const CharPair& pair) const;
  bool contains(const CharPair& pair) const { return index_.count(pair) != 0; }

  bool leq(int lower, int upper) const { return leq_[static_cast<size_t>(lower) * size() + upper] != 0; }
  int act(int g, int id) const { return action_[static_cast<size_t>(g) * size() + id]; }
  const Subgroup& stabilizer(int id) const { return stabilizers_[id]; }
  const Subgroup& kernel(int id) const { return kernels_[id]; }
  // Orbit of each pair under conjugation, as the least pair id in the orbit.
  int orbit_representative(int id) const { return orbit_rep_[id]; }
  std::vector<int> orbit_representatives() const;

 private:
  FiniteGroup group_;
  Character central_;
  std::vector<CharPair> pairs_;
  std::map<CharPair, int> index_;
  std::vector<char> leq_;
  std::vector<int> action_;
  std::vector<Subgroup> stabilizers_;
  std::vector<Subgroup> kernels_;
  std::vector<int> orbit_rep_;
};

}  // namespace mono
