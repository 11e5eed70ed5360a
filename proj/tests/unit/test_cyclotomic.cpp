#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/cyclotomic.hpp"
#include "mono/error.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

CycloScalar random_scalar(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> coeffs(n);
  for (auto& c : coeffs) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return CycloScalar::from_polynomial(n, coeffs);
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("roots of unity") {
    CHECK(CycloScalar::root_of_unity(1, 0).is_one());
    CHECK(CycloScalar::root_of_unity(2, 1) == CycloScalar(-1));
    const auto i = CycloScalar::root_of_unity(4, 1);
    CHECK(i * i == CycloScalar(-1));
    const auto w = CycloScalar::root_of_unity(3, 1);
    CHECK(w + w * w == CycloScalar(-1));
    CHECK(CycloScalar::root_of_unity(8, 1).inverse() == CycloScalar::root_of_unity(8, 7));
    CHECK(CycloScalar::root_of_unity(8, 3).root_of_unity_power() == 3);
    CHECK_FALSE(CycloScalar(2, 8).root_of_unity_power().has_value());
  }

  TEST_CASE("power sums and orders for all small conductors") {
    for (int n = 1; n <= 24; ++n) {
      CycloScalar sum = CycloScalar::zero(n);
      CycloScalar power(1, n);
      const auto z = CycloScalar::root_of_unity(n, 1);
      for (int j = 0; j < n; ++j) {
        sum += CycloScalar::root_of_unity(n, j);
        power = power * z;
      }
      CHECK(power.is_one());
      if (n > 1) CHECK(sum.is_zero());
      CHECK(static_cast<int>(z.coefficients().size()) == euler_phi(n));
    }
  }

  TEST_CASE("arithmetic agrees with complex numbers") {
    std::mt19937_64 rng(7);
    for (int n : {1, 3, 4, 5, 6, 8, 12, 15}) {
      for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
        CHECK(oracle::close(oracle::numeric(a * b), oracle::numeric(a) * oracle::numeric(b)));
        CHECK(oracle::close(oracle::numeric(a + b), oracle::numeric(a) + oracle::numeric(b)));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
          CHECK((a * a.inverse()).is_one());
          CHECK(oracle::close(oracle::numeric(a.inverse()), 1.0 / oracle::numeric(a)));
        }
      }
    }
  }

  TEST_CASE("mixed conductors lift to the lcm") {
    const auto i = CycloScalar::root_of_unity(4, 1);
    const auto w = CycloScalar::root_of_unity(3, 1);
    const auto product = i * w;
    CHECK(product.conductor() == 12);
    CHECK(product == CycloScalar::root_of_unity(12, 7));
    CHECK(CycloScalar::root_of_unity(2, 1) == CycloScalar::root_of_unity(6, 3));
    CHECK(CycloScalar(Rational(1, 2), 1) == CycloScalar(Rational(1, 2), 8));
    CHECK(oracle::close(oracle::numeric(CycloScalar::root_of_unity(12, 5)), oracle::root(12, 5)));
  }

  TEST_CASE("errors and rendering") {
    bool thrown = false;
    try {
      CycloScalar::zero(5).inverse();
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::DivisionByZero;
    }
    CHECK(thrown);
    CHECK(CycloScalar::root_of_unity(4, 1).to_string() == "z [z^4=1]");
    CHECK(CycloScalar(Rational(-3, 2)).to_string() == "-3/2");
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  }
}
