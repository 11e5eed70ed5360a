#include "mono/character.hpp"

#include <algorithm>
#include <numeric>

#include "mono/error.hpp"

namespace mono {

Character::Character(Subgroup domain, std::vector<int> powers) : domain_(std::move(domain)) {
  const auto& group = domain_.group();
  const int n = conductor();
  require(static_cast<int>(powers.size()) == group.order(), ErrorCode::Precondition,
          "character powers must be indexed by group element");
  std::vector<int> table(group.order(), -1);
  for (int h : domain_.elements()) table[h] = ((powers[h] % n) + n) % n;
  for (int a : domain_.elements()) {
    for (int b : domain_.elements()) {
      require(table[group.mul(a, b)] == (table[a] + table[b]) % n, ErrorCode::Precondition,
              "assignment is not a character");
    }
  }
  powers_ = std::make_shared<const std::vector<int>>(std::move(table));
}

Character Character::trivial(const Subgroup& domain) {
  std::vector<int> table(domain.group().order(), -1);
  for (int h : domain.elements()) table[h] = 0;
  return Character(domain, std::make_shared<const std::vector<int>>(std::move(table)));
}

int Character::power(int h) const {
  const int p = (*powers_)[h];
  require(p >= 0, ErrorCode::Precondition, "element outside the character's domain");
  return p;
}

std::vector<int> Character::value_powers() const {
  std::vector<int> out;
  out.reserve(domain_.order());
  for (int h : domain_.elements()) out.push_back((*powers_)[h]);
  return out;
}

bool Character::is_trivial() const {
  for (int h : domain_.elements()) {
    if ((*powers_)[h] != 0) return false;
  }
  return true;
}

Subgroup Character::kernel() const {
  std::vector<int> elements;
  for (int h : domain_.elements()) {
    if ((*powers_)[h] == 0) elements.push_back(h);
  }
  return Subgroup(group(), std::move(elements));
}

Character Character::operator*(const Character& other) const {
  require(domain_ == other.domain_, ErrorCode::Precondition, "characters on different domains");
  std::vector<int> table(group().order(), -1);
  for (int h : domain_.elements()) table[h] = ((*powers_)[h] + (*other.powers_)[h]) % conductor();
  return Character(domain_, std::make_shared<const std::vector<int>>(std::move(table)));
}

Character Character::inverse() const {
  std::vector<int> table(group().order(), -1);
  for (int h : domain_.elements()) table[h] = (conductor() - (*powers_)[h]) % conductor();
  return Character(domain_, std::make_shared<const std::vector<int>>(std::move(table)));
}

bool operator==(const Character& a, const Character& b) {
  if (!(a.domain_ == b.domain_)) return false;
  for (int h : a.domain_.elements()) {
    if ((*a.powers_)[h] != (*b.powers_)[h]) return false;
  }
  return true;
}

bool operator<(const Character& a, const Character& b) {
  if (!(a.domain_ == b.domain_)) return a.domain_ < b.domain_;
  for (int h : a.domain_.elements()) {
    const int pa = (*a.powers_)[h], pb = (*b.powers_)[h];
    if (pa != pb) return pa < pb;
  }
  return false;
}

namespace {

// Least k >= 1 with g^k in n.
int order_modulo(int g, const Subgroup& n) {
  const auto& group = n.group();
  int k = 1;
  for (int p = g; !n.contains(p); p = group.mul(p, g)) ++k;
  return k;
}

}  // namespace

std::vector<std::pair<int, int>> abelian_quotient_basis(const Subgroup& h, const Subgroup& n) {
  const auto& group = h.group();
  if (h.order() == n.order()) return {};
  int best = 0, best_order = 1;
  for (int g : h.elements()) {
    const int k = order_modulo(g, n);
    if (k > best_order) {
      best = g;
      best_order = k;
    }
  }
  std::vector<int> extended = n.elements();
  extended.push_back(best);
  const Subgroup larger = Subgroup::generated_by(group, extended);
  auto rest = abelian_quotient_basis(h, larger);
  // Lift each basis element of H/<N, g> to an element of the same order in
  // H/N. The order d of the image divides the exponent t with h^d = g^t mod N
  // because best_order is the exponent of H/N.
  for (auto& [element, order] : rest) {
    const int hd = group.pow(element, order);
    int t = 0;
    for (int gt = 0;; ++t, gt = group.mul(gt, best)) {
      if (n.contains(group.mul(hd, group.inv(gt)))) break;
    }
    require(t % order == 0, ErrorCode::Precondition, "abelian decomposition lift failed");
    element = group.mul(element, group.pow(best, -(t / order)));
    require(order_modulo(element, n) == order, ErrorCode::Precondition, "abelian decomposition lift failed");
  }
  rest.insert(rest.begin(), {best, best_order});
  return rest;
}

std::vector<int> abelian_invariants(const Subgroup& h) {
  // Elementary divisors from the basis orders, regrouped into invariant factors.
  std::map<int, std::vector<int>> prime_powers;
  for (auto [element, order] : abelian_quotient_basis(h, commutator_subgroup(h))) {
    int m = order;
    for (int p = 2; m > 1; ++p) {
      int q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      if (q > 1) prime_powers[p].push_back(q);
    }
  }
  size_t count = 0;
  for (auto& [p, powers] : prime_powers) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  std::vector<int> factors(count, 1);
  for (const auto& [p, powers] : prime_powers) {
    for (size_t i = 0; i < powers.size(); ++i) factors[count - 1 - i] *= powers[i];
  }
  return factors;
}

std::vector<Character> characters(const Subgroup& h) {
  const auto& group = h.group();
  const int n = group.exponent();
  const Subgroup derived = commutator_subgroup(h);
  const auto basis = abelian_quotient_basis(h, derived);

  // Coordinates of every element of H in the basis of H/[H,H].
  std::vector<std::vector<int>> coordinates(group.order());
  std::vector<int> tuple(basis.size(), 0);
  while (true) {
    int element = 0;
    for (size_t i = 0; i < basis.size(); ++i) element = group.mul(element, group.pow(basis[i].first, tuple[i]));
    for (int d : derived.elements()) coordinates[group.mul(element, d)] = tuple;
    size_t i = 0;
    for (; i < basis.size(); ++i) {
      if (++tuple[i] < basis[i].second) break;
      tuple[i] = 0;
    }
    if (i == basis.size()) break;
  }

  std::vector<Character> result;
  std::vector<int> exponents(basis.size(), 0);
  while (true) {
    std::vector<int> powers(group.order(), -1);
    for (int x : h.elements()) {
      long long p = 0;
      for (size_t i = 0; i < basis.size(); ++i) {
        p += static_cast<long long>(exponents[i]) * coordinates[x][i] * (n / basis[i].second);
      }
      powers[x] = static_cast<int>(p % n);
    }
    result.emplace_back(h, std::move(powers));
    size_t i = 0;
    for (; i < basis.size(); ++i) {
      if (++exponents[i] < basis[i].second) break;
      exponents[i] = 0;
    }
    if (i == basis.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

Character restrict(const Character& phi, const Subgroup& k) {
  require(phi.domain().contains(k), ErrorCode::NotASubgroup, "restriction target is not inside the domain");
  std::vector<int> powers(phi.group().order(), -1);
  for (int x : k.elements()) powers[x] = phi.power(x);
  return Character(k, std::move(powers));
}

Character conj_character(int g, const Character& phi) {
  const auto& group = phi.group();
  const int g_inv = group.inv(g);
  Subgroup domain = conjugate_subgroup(g_inv, phi.domain());
  std::vector<int> powers(group.order(), -1);
  for (int k : domain.elements()) powers[k] = phi.power(group.conj(g, k));
  return Character(std::move(domain), std::move(powers));
}

Character act(int g, const Character& phi) { return conj_character(phi.group().inv(g), phi); }

bool pair_leq(const CharPair& lower, const CharPair& upper) {
  if (!upper.domain().contains(lower.domain())) return false;
  for (int k : lower.domain().elements()) {
    if (lower.power(k) != upper.power(k)) return false;
  }
  return true;
}

Subgroup stabilizer(const CharPair& pair) {
  const auto& group = pair.group();
  std::vector<int> elements;
  for (int z = 0; z < group.order(); ++z) {
    bool fixes = true;
    for (int k : pair.domain().elements()) {
      const int zk = group.conj(z, k);
      if (!pair.domain().contains(zk) || pair.power(zk) != pair.power(k)) {
        fixes = false;
        break;
      }
    }
    if (fixes) elements.push_back(z);
  }
  return Subgroup(group, std::move(elements));
}

std::vector<Character> central_characters(const FiniteGroup& group) { return characters(center(group)); }

Character central_character_by_tag(const FiniteGroup& group, const std::string& tag) {
  auto all = central_characters(group);
  if (tag == "trivial") return all.front();
  size_t index = 0;
  try {
    size_t used = 0;
    index = std::stoul(tag, &used);
    require(used == tag.size(), ErrorCode::Parse, "bad central character '" + tag + "'");
  } catch (const std::logic_error&) {
    fail(ErrorCode::Parse, "bad central character '" + tag + "'");
  }
  require(index < all.size(), ErrorCode::Precondition,
          "central character index " + tag + " out of range (" + std::to_string(all.size()) + " available)");
  return all[index];
}

std::vector<CharPair> pairs_poset(const FiniteGroup& group, const Character& central) {
  const Subgroup z = center(group);
  require(central.domain() == z, ErrorCode::Precondition, "central character must live on Z(G)");
  std::vector<CharPair> pairs;
  for (const auto& h : subgroups_containing(group, z)) {
    for (auto& chi : characters(h)) {
      if (pair_leq(central, chi)) pairs.push_back(std::move(chi));
    }
  }
  return pairs;
}

PairPoset::PairPoset(FiniteGroup group, Character central)
    : group_(std::move(group)), central_(std::move(central)), pairs_(pairs_poset(group_, central_)) {
  const int p = size();
  for (int i = 0; i < p; ++i) index_.emplace(pairs_[i], i);
  leq_.assign(static_cast<size_t>(p) * p, 0);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) leq_[static_cast<size_t>(a) * p + b] = pair_leq(pairs_[a], pairs_[b]);
  }
  action_.assign(static_cast<size_t>(group_.order()) * p, -1);
  for (int g = 0; g < group_.order(); ++g) {
    for (int i = 0; i < p; ++i) action_[static_cast<size_t>(g) * p + i] = id_of(mono::act(g, pairs_[i]));
  }
  for (int i = 0; i < p; ++i) {
    std::vector<int> stab;
    for (int g = 0; g < group_.order(); ++g) {
      if (act(g, i) == i) stab.push_back(g);
    }
    stabilizers_.emplace_back(group_, std::move(stab));
    kernels_.push_back(pairs_[i].kernel());
    int rep = i;
    for (int g = 0; g < group_.order(); ++g) rep = std::min(rep, act(g, i));
    orbit_rep_.push_back(rep);
  }
}

int PairPoset::id_of(const CharPair& pair) const {
  auto it = index_.find(pair);
  require(it != index_.end(), ErrorCode::Precondition, "pair is not in the poset");
  return it->second;
}

std::vector<int> PairPoset::orbit_representatives() const {
  std::vector<int> reps;
  for (int i = 0; i < size(); ++i) {
    if (orbit_rep_[i] == i) reps.push_back(i);
  }
  return reps;
}

}  // namespace mono
