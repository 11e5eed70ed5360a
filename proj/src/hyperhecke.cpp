#include "mono/hyperhecke.hpp"

#include "mono/error.hpp"

namespace mono {

bool triple_valid(const Triple& t) {
  const auto& group = t.source.group();
  for (int k : t.source.domain().elements()) {
    const int image = group.conj(t.g, k);
    if (!t.target.domain().contains(image)) return false;
    if (t.target.power(image) != t.source.power(k)) return false;
  }
  return true;
}

void HHElement::add(const TripleKey& key, const CycloScalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycloScalar HHElement::coefficient(const TripleKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? CycloScalar() : it->second;
}

HHElement& HHElement::operator+=(const HHElement& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

HHElement& HHElement::operator-=(const HHElement& other) {
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

HHElement operator*(const CycloScalar& c, const HHElement& x) {
  HHElement result;
  for (const auto& [key, value] : x.terms_) result.add(key, c * value);
  return result;
}

HyperHeckeAlgebra::HyperHeckeAlgebra(FiniteGroup group, Character central)
    : poset_(std::make_shared<const PairPoset>(std::move(group), std::move(central))) {
  build();
}

HyperHeckeAlgebra::HyperHeckeAlgebra(std::shared_ptr<const PairPoset> poset) : poset_(std::move(poset)) { build(); }

void HyperHeckeAlgebra::build() {
  const auto& g = group();
  const int p = poset_->size();
  const int n = g.order();
  canonical_g_.assign(static_cast<size_t>(p) * p * n, -1);
  canonical_power_.assign(canonical_g_.size(), 0);
  for (int source = 0; source < p; ++source) {
    for (int target = 0; target < p; ++target) {
      const CharPair& phi = poset_->pair(target);
      for (int x = 0; x < n; ++x) {
        // valid iff (K, psi) <= x^-1 . (H, phi)
        if (!poset_->leq(source, poset_->act(g.inv(x), target))) continue;
        // H x K = H x, so the least element of H x represents the class.
        int best = x;
        for (int h : phi.domain().elements()) best = std::min(best, g.mul(h, x));
        const int h0 = g.mul(x, g.inv(best));
        const size_t s = slot(source, target, x);
        canonical_g_[s] = best;
        canonical_power_[s] = (conductor() - phi.power(h0)) % conductor();
      }
    }
  }
}

bool HyperHeckeAlgebra::valid(const TripleKey& t) const {
  if (t.source < 0 || t.target < 0 || t.source >= poset_->size() || t.target >= poset_->size()) return false;
  if (t.g < 0 || t.g >= group().order()) return false;
  return canonical_g_[slot(t.source, t.target, t.g)] >= 0;
}

TripleKey HyperHeckeAlgebra::key(const Triple& t) const {
  return TripleKey{poset_->id_of(t.source), t.g, poset_->id_of(t.target)};
}

Triple HyperHeckeAlgebra::triple(const TripleKey& t) const {
  return Triple{poset_->pair(t.source), t.g, poset_->pair(t.target)};
}

std::pair<TripleKey, int> HyperHeckeAlgebra::canonicalize(const TripleKey& t) const {
  require(valid(t), ErrorCode::InvalidTriple, "triple violates the containment or character condition");
  const size_t s = slot(t.source, t.target, t.g);
  return {TripleKey{t.source, canonical_g_[s], t.target}, canonical_power_[s]};
}

HHElement HyperHeckeAlgebra::element(const TripleKey& t) const {
  auto [canonical, power] = canonicalize(t);
  HHElement result;
  result.add(canonical, CycloScalar::root_of_unity(conductor(), power));
  return result;
}

std::optional<std::pair<TripleKey, int>> HyperHeckeAlgebra::multiply_basis(const TripleKey& left,
                                                                           const TripleKey& right) const {
  if (left.source != right.target) return std::nullopt;
  return canonicalize(TripleKey{right.source, group().mul(left.g, right.g), left.target});
}

HHElement HyperHeckeAlgebra::multiply(const HHElement& left, const HHElement& right) const {
  HHElement result;
  for (const auto& [a, ca] : left.terms()) {
    for (const auto& [b, cb] : right.terms()) {
      if (auto product = multiply_basis(a, b)) {
        result.add(product->first, ca * cb * CycloScalar::root_of_unity(conductor(), product->second));
      }
    }
  }
  return result;
}

std::vector<TripleKey> HyperHeckeAlgebra::basis() const {
  std::vector<int> all(poset_->size());
  for (int i = 0; i < poset_->size(); ++i) all[i] = i;
  return basis(all);
}

std::vector<TripleKey> HyperHeckeAlgebra::basis(const std::vector<int>& pairs) const {
  std::vector<TripleKey> result;
  for (int source : pairs) {
    for (int target : pairs) {
      for (int x = 0; x < group().order(); ++x) {
        const size_t s = slot(source, target, x);
        if (canonical_g_[s] == x) result.push_back(TripleKey{source, x, target});
      }
    }
  }
  return result;
}

HHElement HyperHeckeAlgebra::idempotent_sum(const std::vector<int>& pairs) const {
  HHElement result;
  for (int p : pairs) result.add(TripleKey{p, 0, p}, CycloScalar(1, conductor()));
  return result;
}

}  // namespace mono
