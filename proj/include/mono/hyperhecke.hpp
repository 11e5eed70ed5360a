#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mono/character.hpp"

namespace mono {

// [(K, psi), g, (H, phi)] with poset ids for the pairs; a morphism from
// Ind_K(psi) to Ind_H(phi). Ordered by (source, target, g).
struct TripleKey {
  int source;
  int g;
  int target;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
  friend bool operator<(const TripleKey& a, const TripleKey& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.g < b.g;
  }
};

struct Triple {
  CharPair source;
  int g;
  CharPair target;
};

// K inside g^-1 H g and psi(k) = phi(g k g^-1) on K.
bool triple_valid(const Triple& t);

// Finite linear combination of canonical triples.
class HHElement {
 public:
  void add(const TripleKey& key, const CycloScalar& coefficient);
  const std::map<TripleKey, CycloScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloScalar coefficient(const TripleKey& key) const;

  HHElement& operator+=(const HHElement& other);
  HHElement& operator-=(const HHElement& other);
  friend HHElement operator+(HHElement a, const HHElement& b) { return a += b; }
  friend HHElement operator-(HHElement a, const HHElement& b) { return a -= b; }
  friend HHElement operator*(const CycloScalar& c, const HHElement& x);
  friend bool operator==(const HHElement& a, const HHElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<TripleKey, CycloScalar> terms_;
};

// The algebra spanned by triples between the pairs of one central
// character, modulo the left and right scalar relations.
class HyperHeckeAlgebra {
 public:
  HyperHeckeAlgebra(FiniteGroup group, Character central);
  explicit HyperHeckeAlgebra(std::shared_ptr<const PairPoset> poset);

  const PairPoset& poset() const { return *poset_; }
  std::shared_ptr<const PairPoset> poset_ptr() const { return poset_; }
  const FiniteGroup& group() const { return poset_->group(); }
  int conductor() const { return group().exponent(); }

  bool valid(const TripleKey& t) const;
  TripleKey key(const Triple& t) const;
  Triple triple(const TripleKey& t) const;

  // Canonical triple and the power j with t = zeta^j * canonical. The
  // canonical g is the least element of the double coset H g K.
  std::pair<TripleKey, int> canonicalize(const TripleKey& t) const;
  HHElement element(const TripleKey& t) const;
  HHElement element(const Triple& t) const { return element(key(t)); }

  // Product of canonical basis triples: zero unless the middle pairs agree.
  std::optional<std::pair<TripleKey, int>> multiply_basis(const TripleKey& left, const TripleKey& right) const;
  HHElement multiply(const HHElement& left, const HHElement& right) const;

  // Canonical triples between the given pairs (all pairs when empty).
  std::vector<TripleKey> basis() const;
  std::vector<TripleKey> basis(const std::vector<int>& pairs) const;
  // Sum of the identity triples [(H, phi), 1, (H, phi)].
  HHElement idempotent_sum(const std::vector<int>& pairs) const;

 private:
  void build();
  size_t slot(int source, int target, int g) const {
    return (static_cast<size_t>(source) * poset_->size() + target) * group().order() + g;
  }

  std::shared_ptr<const PairPoset> poset_;
  std::vector<int> canonical_g_;      // -1 when invalid
  std::vector<int> canonical_power_;
};

}  // namespace mono
