#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mono/error.hpp"
#include "mono/monocentre.hpp"

using namespace mono;

namespace {

constexpr int X = 1, X2 = 2;

std::vector<int> least_coset_reps(const Subgroup& stab, const Subgroup& kernel) {
  const auto& group = stab.group();
  std::set<int> reps;
  for (int s : stab.elements()) {
    int best = s;
    for (int k : kernel.elements()) best = std::min(best, group.mul(s, k));
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

HHElement diagonal(const HyperHeckeAlgebra& algebra, int pair, int x) {
  return algebra.element(TripleKey{pair, x, pair});
}

// Oracle: backtracking over coset choices, keeping assignments whose
// diagonal elements commute with every basis triple between assigned pairs.
// Commutation is tested with products in the algebra itself.
std::vector<MonoFamily> commuting_families(const HyperHeckeAlgebra& algebra) {
  const auto& poset = algebra.poset();
  const int p = poset.size();
  std::vector<std::vector<int>> choices(p);
  for (int i = 0; i < p; ++i) choices[i] = least_coset_reps(poset.stabilizer(i), poset.kernel(i));
  const auto basis = algebra.basis();
  std::vector<MonoFamily> found;
  std::vector<int> assigned(p, -1);
  auto consistent = [&](int upto) {
    for (const auto& t : basis) {
      if (t.source > upto || t.target > upto) continue;
      if (t.source != upto && t.target != upto) continue;
      const auto e = algebra.element(t);
      if (!(algebra.multiply(e, diagonal(algebra, t.source, assigned[t.source])) ==
            algebra.multiply(diagonal(algebra, t.target, assigned[t.target]), e))) {
        return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == p) {
      found.push_back(MonoFamily{assigned});
      return;
    }
    for (int x : choices[i]) {
      assigned[i] = x;
      if (consistent(i)) self(self, i + 1);
    }
    assigned[i] = -1;
  };
  recurse(recurse, 0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

TEST_SUITE("monocentre") {
  TEST_CASE("D8 trivial central character") {
    const auto d8 = builtin_group("d8");
    const PairPoset poset(d8, central_characters(d8)[0]);
    const auto report = monocentre(poset);
    CHECK(report.order() == 4);
    CHECK(report.closed);
    CHECK(report.abelian);
    CHECK(report.invariants == std::vector<int>{2, 2});
    CHECK(report.families.front() == identity_family(poset));
    // Families from elements of G hit the whole monocentre.
    std::set<int> hit(report.element_family.begin(), report.element_family.end());
    hit.erase(-1);
    CHECK(hit.size() == 4);
  }

  TEST_CASE("D8 faithful central character") {
    const auto d8 = builtin_group("d8");
    const PairPoset poset(d8, central_characters(d8)[1]);
    const auto report = monocentre(poset);
    CHECK(report.order() == 2);
    CHECK(report.invariants == std::vector<int>{2});
    // Both families come from the centre; x itself fails.
    for (const auto& family : report.families) {
      bool from_centre = false;
      for (int z : {0, X2}) {
        const auto f = family_from_element(poset, z);
        if (f && *f == family) from_centre = true;
      }
      CHECK(from_centre);
    }
    const auto x_family = family_from_element(poset, X);
    if (x_family) CHECK_FALSE(family_in_monocentre(poset, *x_family));
    CHECK(report.element_family[X] == -1);
  }

  TEST_CASE("agrees with an independent search for small groups") {
    for (const char* name : {"c2", "c3", "c4", "c5", "c6", "c7", "c8", "d4", "d6", "d8", "q8", "s3"}) {
      const auto g = builtin_group(name);
      for (const auto& c : central_characters(g)) {
        CAPTURE(name);
        const HyperHeckeAlgebra algebra(g, c);
        const auto& poset = algebra.poset();
        const auto oracle = commuting_families(algebra);
        const auto report = monocentre(poset);
        CHECK(report.families.size() == oracle.size());
        auto sorted = report.families;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == oracle);
        CHECK(monocentre_exhaustive(poset) == oracle);
        for (const auto& family : report.families) {
          CHECK(family_in_monocentre(poset, family));
          for (const auto& t : algebra.basis()) CHECK(family_commutes_with_triple(algebra, family, t));
        }
      }
    }
  }

  TEST_CASE("group structure") {
    for (const char* name : {"d8", "q8", "s3", "c6", "d12", "a4"}) {
      const auto g = builtin_group(name);
      for (const auto& c : central_characters(g)) {
        const PairPoset poset(g, c);
        const auto report = monocentre(poset);
        CHECK(report.closed);
        CHECK(report.abelian);
        int product = 1;
        for (int d : report.invariants) product *= d;
        CHECK(product == report.order());
        std::set<MonoFamily> members(report.families.begin(), report.families.end());
        for (const auto& a : report.families) {
          // Every family has an inverse inside the set.
          bool has_inverse = false;
          for (const auto& b : report.families) {
            if (family_product(poset, a, b) == identity_family(poset)) has_inverse = true;
          }
          CHECK(has_inverse);
          for (const auto& b : report.families) {
            CHECK(members.count(family_product(poset, a, b)) == 1);
            CHECK(family_product(poset, a, b) == family_product(poset, b, a));
          }
        }
        // Translating any representative by its kernel leaves the family unchanged.
        for (const auto& family : report.families) {
          for (int i = 0; i < poset.size(); ++i) {
            for (int k : poset.kernel(i).elements()) {
              auto moved = family;
              moved.representatives[i] = g.mul(family.representatives[i], k);
              const auto canonical = family_product(poset, moved, identity_family(poset));
              CHECK(canonical == family);
            }
          }
        }
      }
    }
  }

  TEST_CASE("exhaustive search is guarded") {
    for (const char* name : {"c9", "d10", "a4", "s4"}) {
      const auto g = builtin_group(name);
      bool thrown = false;
      try {
        monocentre_exhaustive(PairPoset(g, central_characters(g)[0]));
      } catch (const Error& e) {
        thrown = e.code() == ErrorCode::TooLarge;
      }
      CHECK(thrown);
    }
  }
}
