#include "mono/monocentre.hpp"

#include <algorithm>
#include <set>

#include "mono/error.hpp"

namespace mono {

namespace {

int coset_min(const FiniteGroup& group, int x, const Subgroup& kernel) {
  int best = x;
  for (int k : kernel.elements()) best = std::min(best, group.mul(x, k));
  return best;
}

constexpr long long kExhaustiveAssignmentLimit = 1000000;

}  // namespace

bool monocentre_condition(const PairPoset& poset, const TripleKey& t, int x_source, int x_target) {
  const auto& group = poset.group();
  const int moved = group.conj(t.g, x_source);
  if (!poset.stabilizer(t.target).contains(moved)) return false;
  return poset.kernel(t.target).contains(group.mul(group.inv(x_target), moved));
}

bool family_in_monocentre(const PairPoset& poset, const MonoFamily& family) {
  const auto& group = poset.group();
  for (int source = 0; source < poset.size(); ++source) {
    for (int target = 0; target < poset.size(); ++target) {
      for (int g = 0; g < group.order(); ++g) {
        if (!poset.leq(source, poset.act(group.inv(g), target))) continue;
        if (!monocentre_condition(poset, {source, g, target}, family.representatives[source],
                                  family.representatives[target])) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<MonoFamily> family_from_element(const PairPoset& poset, int x) {
  MonoFamily family;
  for (int p = 0; p < poset.size(); ++p) {
    if (!poset.stabilizer(p).contains(x)) return std::nullopt;
    family.representatives.push_back(coset_min(poset.group(), x, poset.kernel(p)));
  }
  return family;
}

MonoFamily identity_family(const PairPoset& poset) {
  return MonoFamily{std::vector<int>(poset.size(), 0)};
}

MonoFamily family_product(const PairPoset& poset, const MonoFamily& a, const MonoFamily& b) {
  MonoFamily product;
  for (int p = 0; p < poset.size(); ++p) {
    const int x = poset.group().mul(a.representatives[p], b.representatives[p]);
    product.representatives.push_back(coset_min(poset.group(), x, poset.kernel(p)));
  }
  return product;
}

MonocentreReport monocentre(const PairPoset& poset) {
  const auto& group = poset.group();
  const Subgroup central_kernel = poset.central().kernel();
  std::set<MonoFamily> accepted;
  std::vector<std::optional<MonoFamily>> per_element(group.order());
  for (int x = 0; x < group.order(); ++x) {
    if (coset_min(group, x, central_kernel) != x) continue;
    auto family = family_from_element(poset, x);
    if (family && family_in_monocentre(poset, *family)) {
      accepted.insert(*family);
      for (int k : central_kernel.elements()) per_element[group.mul(x, k)] = family;
    }
  }
  MonocentreReport report;
  report.families.assign(accepted.begin(), accepted.end());
  const int m = report.order();
  report.element_family.assign(group.order(), -1);
  for (int x = 0; x < group.order(); ++x) {
    if (per_element[x]) {
      report.element_family[x] = static_cast<int>(
          std::lower_bound(report.families.begin(), report.families.end(), *per_element[x]) -
          report.families.begin());
    }
  }
  report.closed = m > 0 && report.families.front() == identity_family(poset);
  report.table.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      auto product = family_product(poset, report.families[a], report.families[b]);
      auto it = std::lower_bound(report.families.begin(), report.families.end(), product);
      if (it == report.families.end() || !(*it == product)) {
        report.closed = false;
      } else {
        report.table[a][b] = static_cast<int>(it - report.families.begin());
      }
    }
  }
  if (report.closed) {
    const FiniteGroup quotient = FiniteGroup::from_cayley_table("monocentre", report.table);
    report.abelian = quotient.is_abelian();
    report.invariants = abelian_invariants(Subgroup::whole(quotient));
  }
  return report;
}

std::vector<MonoFamily> monocentre_exhaustive(const PairPoset& poset) {
  const auto& group = poset.group();
  require(group.order() <= 8, ErrorCode::TooLarge, "exhaustive monocentre search needs |G| <= 8");
  const int p = poset.size();
  std::vector<std::vector<int>> choices(p);
  long long total = 1;
  for (int i = 0; i < p; ++i) {
    std::set<int> reps;
    for (int x : poset.stabilizer(i).elements()) reps.insert(coset_min(group, x, poset.kernel(i)));
    choices[i].assign(reps.begin(), reps.end());
    total *= static_cast<long long>(choices[i].size());
    require(total <= kExhaustiveAssignmentLimit, ErrorCode::TooLarge,
            "exhaustive monocentre search exceeds 10^6 assignments");
  }
  // Triples grouped by the later of their two endpoints, for pruning.
  std::vector<std::vector<TripleKey>> closing(p);
  for (int source = 0; source < p; ++source) {
    for (int target = 0; target < p; ++target) {
      for (int g = 0; g < group.order(); ++g) {
        if (poset.leq(source, poset.act(group.inv(g), target))) {
          closing[std::max(source, target)].push_back({source, g, target});
        }
      }
    }
  }
  std::vector<MonoFamily> result;
  std::vector<int> assignment(p, 0);
  auto search = [&](auto&& self, int i) -> void {
    if (i == p) {
      result.push_back(MonoFamily{assignment});
      return;
    }
    for (int x : choices[i]) {
      assignment[i] = x;
      bool ok = true;
      for (const auto& t : closing[i]) {
        if (!monocentre_condition(poset, t, assignment[t.source], assignment[t.target])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  search(search, 0);
  std::sort(result.begin(), result.end());
  return result;
}

bool family_commutes_with_triple(const HyperHeckeAlgebra& algebra, const MonoFamily& family, const TripleKey& t) {
  const HHElement triple = algebra.element(t);
  const HHElement at_source = algebra.element(TripleKey{t.source, family.representatives[t.source], t.source});
  const HHElement at_target = algebra.element(TripleKey{t.target, family.representatives[t.target], t.target});
  return algebra.multiply(triple, at_source) == algebra.multiply(at_target, triple);
}

}  // namespace mono
