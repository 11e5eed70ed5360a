#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mono {

using Rational = mpq_class;

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), always
// reduced modulo the N-th cyclotomic polynomial. Values with different
// conductors combine in the field of the lcm conductor.
class CycloScalar {
 public:
  CycloScalar() : CycloScalar(Rational(0)) {}
  CycloScalar(const Rational& value, int conductor = 1);
  CycloScalar(long value, int conductor = 1) : CycloScalar(Rational(value), conductor) {}
  CycloScalar(int value, int conductor = 1) : CycloScalar(Rational(value), conductor) {}

  static CycloScalar zero(int conductor) { return CycloScalar(Rational(0), conductor); }

  static CycloScalar root_of_unity(int conductor, long long power);
  // Coefficients of any polynomial in z; reduced on construction.
  static CycloScalar from_polynomial(int conductor, const std::vector<Rational>& coefficients);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  // The same value viewed in Q(zeta_m); m must be a multiple of conductor().
  CycloScalar lifted(int m) const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& other);
  CycloScalar& operator-=(const CycloScalar& other);
  CycloScalar& operator*=(const CycloScalar& other);
  CycloScalar& operator/=(const CycloScalar& other);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  // Throws DivisionByZero on zero.
  CycloScalar inverse() const;

  // j in [0, conductor) with value == zeta^j, if the value is a root of unity
  // of order dividing the conductor.
  std::optional<int> root_of_unity_power() const;

  // "a0 + a1*z + ..." followed by the conductor, e.g. "1/2 - z^3 [z^8=1]".
  std::string to_string() const;

 private:
  int conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

int euler_phi(int n);
int lcm_int(int a, int b);

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

}  // namespace mono
