#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/convolution.hpp"
#include "mono/error.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

constexpr int X2 = 2;

GroupFunction random_function(const FiniteGroup& g, std::mt19937_64& rng) {
  const int n = g.exponent();
  std::uniform_int_distribution<int> value(-2, 2), power(0, n - 1);
  GroupFunction f(g);
  for (int x = 0; x < g.order(); ++x) f.at(x) = CycloScalar(value(rng), n) * CycloScalar::root_of_unity(n, power(rng));
  return f;
}

// Oracle: (a * b)(g) = sum over pairs with x y = g of a(x) b(y).
GroupFunction convolve_by_pairs(const GroupFunction& a, const GroupFunction& b) {
  const auto& g = a.group();
  GroupFunction out(g);
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) out.at(g.mul(x, y)) += a(x) * b(y);
  }
  return out;
}

// Oracle: (g1 g^-1).f_(H,phi) evaluated directly, x -> f(x g1 g^-1).
GroupFunction expected_image(const Triple& t, int g1) {
  const auto& g = t.target.group();
  const int n = g.exponent();
  const int shift = g.mul(g1, g.inv(t.g));
  GroupFunction out(g);
  for (int x = 0; x < g.order(); ++x) {
    const int y = g.mul(x, shift);
    if (t.target.domain().contains(y)) out.at(x) = CycloScalar::root_of_unity(n, t.target.power(y));
  }
  return out;
}

bool phi_squares_trivial(const Triple& t, const CosetChoice& choice) {
  const int n = t.target.conductor();
  for (int u : choice.u) {
    if ((2 * t.target.power(u)) % n != 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("convolution") {
  TEST_CASE("convolution products") {
    std::mt19937_64 rng(29);
    for (const char* name : {"d8", "s3", "c6", "q8"}) {
      const auto g = builtin_group(name);
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          CHECK(convolve(GroupFunction::delta(g, a), GroupFunction::delta(g, b)) == GroupFunction::delta(g, g.mul(a, b)));
        }
      }
      for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_function(g, rng), b = random_function(g, rng);
        const auto product = convolve(a, b);
        CHECK(product == convolve_right_form(a, b));
        CHECK(product == convolve_by_pairs(a, b));
        CHECK(convolve(a, GroupFunction::delta(g, 0)) == a);
        // T reverses products.
        CHECK(involution(product) == convolve(involution(b), involution(a)));
        CHECK(involution(involution(a)) == a);
      }
      const auto subgroups = all_subgroups(g);
      for (const auto& k0 : subgroups) {
        const auto e0 = subgroup_idempotent(k0);
        CHECK(convolve(e0, e0) == e0);
        for (const auto& k1 : subgroups) {
          if (k1.contains(k0)) CHECK(convolve(e0, subgroup_idempotent(k1)) == subgroup_idempotent(k1));
        }
      }
      for (int x = 0; x < g.order(); ++x) CHECK(involution(GroupFunction::delta(g, x)) == GroupFunction::delta(g, g.inv(x)));
      // Class functions are fixed by T exactly when every class is closed under inverses.
      GroupFunction class_sum(g);
      for (int x = 0; x < g.order(); ++x) class_sum.at(x) = CycloScalar(g.element_order(x));
      CHECK(involution(class_sum) == class_sum);
    }
  }

  TEST_CASE("phi elements") {
    const auto d8 = builtin_group("d8");
    const auto central = central_characters(d8);
    const Triple identity{central[1], 0, central[1]};
    const auto phi = phi_element(identity, minimal_coset_choice(identity));
    CHECK(phi == GroupFunction::delta(d8, 0));
    CHECK(phi_element(identity, minimal_coset_choice(identity), PhiWeights::Conjugated) == phi);

    for (const char* name : {"d8", "s3", "q8", "c4"}) {
      const auto g = builtin_group(name);
      for (const auto& c : central_characters(g)) {
        const HyperHeckeAlgebra algebra(g, c);
        for (const auto& key : algebra.basis()) {
          const auto t = algebra.triple(key);
          const auto choice = minimal_coset_choice(t);
          const auto f = phi_element(t, choice);
          // Support inside g^-1 H.
          for (int x = 0; x < g.order(); ++x) {
            if (!f(x).is_zero()) CHECK(t.target.domain().contains(g.mul(t.g, x)));
          }
          CHECK(static_cast<int>(choice.v.size() * choice.u.size()) * t.target.kernel().order() == t.target.domain().order());
          if (t.target.is_trivial()) {
            // Ker(phi) = H leaves one u and the indicator of g^-1 H.
            CHECK(choice.u.size() == 1);
            std::vector<int> coset;
            for (int h : t.target.domain().elements()) coset.push_back(g.mul(g.inv(t.g), h));
            std::sort(coset.begin(), coset.end());
            CHECK(f == GroupFunction::indicator(g, coset));
          }
        }
        // Trivial phi on the whole group gives a single indicator of G.
        const auto whole = Character::trivial(Subgroup::whole(g));
        if (c.is_trivial()) {
          const Triple top{whole, 0, whole};
          CHECK(phi_element(top, minimal_coset_choice(top)) == GroupFunction::indicator(g, Subgroup::whole(g).elements()));
        }
      }
    }
    bool thrown = false;
    try {
      const Triple bad{Character::trivial(Subgroup::whole(d8)), 0, central[0]};
      phi_element(bad, CosetChoice{});
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::InvalidTriple;
    }
    CHECK(thrown);
  }

  TEST_CASE("translation formula on small groups") {
    int literal_failures = 0;
    for (const char* name : {"c2", "c3", "c4", "c5", "c6", "c7", "c8", "d4", "d6", "d8", "q8", "s3"}) {
      const auto g = builtin_group(name);
      for (const auto& c : central_characters(g)) {
        const HyperHeckeAlgebra algebra(g, c);
        for (const auto& key : algebra.basis()) {
          const auto t = algebra.triple(key);
          const auto choice = minimal_coset_choice(t);
          for (int g1 = 0; g1 < g.order(); ++g1) {
            CAPTURE(name);
            const auto check = translation_formula_check(t, g1, choice);
            CHECK(check.expansion_matches);
            CHECK(check.holds);
            CHECK(check.expected == expected_image(t, g1));
            CHECK(check.computed == check.expected);
            const auto literal = translation_formula_check(t, g1, choice, PhiWeights::AsWritten);
            if (phi_squares_trivial(t, choice)) {
              CHECK(literal.holds);
            } else if (!literal.holds) {
              ++literal_failures;
            }
          }
        }
      }
    }
    // Weights phi(u) rather than their inverses break the identity somewhere.
    CHECK(literal_failures > 0);
  }

  TEST_CASE("translation formula is independent of coset choices") {
    std::mt19937_64 rng(41);
    for (const char* name : {"s3", "d8", "q8", "a4"}) {
      const auto g = builtin_group(name);
      for (const auto& c : central_characters(g)) {
        const HyperHeckeAlgebra algebra(g, c);
        for (const auto& key : algebra.basis()) {
          const auto t = algebra.triple(key);
          for (int trial = 0; trial < 3; ++trial) {
            const auto choice = random_coset_choice(t, rng);
            const int g1 = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
            const auto check = translation_formula_check(t, g1, choice);
            CHECK(check.holds);
            CHECK(check.expected == expected_image(t, g1));
            CHECK(translated_pair_function_expansion(t.source, choice.v, g1) ==
                  pair_function(t.source).translated(g1));
          }
        }
      }
    }
  }

  TEST_CASE("operators of group functions") {
    std::mt19937_64 rng(43);
    const auto s3 = builtin_group("s3");
    const auto catalog = irreducible_catalog(s3);
    const auto& standard = catalog.back();
    CHECK(pi_of_phi(standard, GroupFunction::delta(s3, 0)) == Matrix::identity(2, s3.exponent()));
    for (int x = 0; x < 6; ++x) CHECK(pi_of_phi(standard, GroupFunction::delta(s3, x)) == standard(x));
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_function(s3, rng), b = random_function(s3, rng);
      CHECK(pi_of_phi(standard, convolve(a, b)) == pi_of_phi(standard, a) * pi_of_phi(standard, b));
    }
    for (const auto& rho : catalog) {
      CHECK(trace_distribution(rho, GroupFunction::delta(s3, 0)) == CycloScalar(static_cast<long>(rho.dim())));
    }
    // Distinct irreducibles differ on some delta function.
    for (size_t i = 0; i < catalog.size(); ++i) {
      for (size_t j = i + 1; j < catalog.size(); ++j) {
        bool differ = false;
        for (int x = 0; x < 6; ++x) {
          const auto delta = GroupFunction::delta(s3, x);
          differ = differ || !(trace_distribution(catalog[i], delta) == trace_distribution(catalog[j], delta));
        }
        CHECK(differ);
      }
    }
    const auto d8 = builtin_group("d8");
    for (const auto& rho : irreducible_catalog(d8)) {
      for (int x = 0; x < 8; ++x) {
        CycloScalar trace(0, 4);
        for (size_t i = 0; i < rho.dim(); ++i) trace += rho(x)(i, i);
        CHECK(trace_distribution(rho, GroupFunction::delta(d8, x)) == trace);
      }
      CHECK(pi_of_phi(rho, GroupFunction::delta(d8, X2)) == rho(X2));
    }
  }
}
