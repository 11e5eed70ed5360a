#include "mono/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mono/error.hpp"

namespace mono {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of p by monic q.
IntPoly divide_monic(IntPoly p, const IntPoly& q) {
  const size_t dq = q.size() - 1;
  if (p.size() <= dq) return {0};
  IntPoly quotient(p.size() - dq, 0);
  for (size_t i = p.size(); i-- > dq;) {
    mpz_class lead = p[i];
    quotient[i - dq] = lead;
    if (lead == 0) continue;
    for (size_t j = 0; j <= dq; ++j) p[i - dq + j] -= lead * q[j];
  }
  trim(quotient);
  return quotient;
}

// Reduction data for one conductor: powers[j] = z^j in the power basis.
struct CyclotomicData {
  int n = 1;
  int phi = 1;
  std::vector<std::vector<mpz_class>> powers;
};

std::shared_ptr<const CyclotomicData> build_data(int n) {
  auto data = std::make_shared<CyclotomicData>();
  data->n = n;
  IntPoly cyc = cyclotomic_polynomial(n);
  data->phi = static_cast<int>(cyc.size()) - 1;
  const int phi = data->phi;
  std::vector<mpz_class> current(phi, 0);
  current[0] = 1;
  data->powers.reserve(n);
  for (int j = 0; j < n; ++j) {
    data->powers.push_back(current);
    // multiply by z and reduce by the monic polynomial
    mpz_class carry = current[phi - 1];
    for (int k = phi - 1; k > 0; --k) current[k] = current[k - 1];
    current[0] = 0;
    if (carry != 0) {
      for (int k = 0; k < phi; ++k) current[k] -= carry * cyc[k];
    }
  }
  return data;
}

const CyclotomicData& data_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_data(n)).first;
  return *it->second;
}

int checked_conductor(int n) {
  require(n >= 1, ErrorCode::Precondition, "conductor must be positive");
  return n;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

CycloScalar::CycloScalar(const Rational& value, int conductor)
    : conductor_(checked_conductor(conductor)),
      coeffs_(data_for(conductor).phi, Rational(0)) {
  coeffs_[0] = value;
}

CycloScalar CycloScalar::root_of_unity(int conductor, long long power) {
  CycloScalar result = CycloScalar::zero(conductor);
  const auto& data = data_for(conductor);
  long long j = power % conductor;
  if (j < 0) j += conductor;
  const auto& row = data.powers[j];
  for (int k = 0; k < data.phi; ++k) result.coeffs_[k] = row[k];
  return result;
}

CycloScalar CycloScalar::from_polynomial(int conductor, const std::vector<Rational>& coefficients) {
  CycloScalar result = CycloScalar::zero(conductor);
  const auto& data = data_for(conductor);
  for (size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j] == 0) continue;
    const auto& row = data.powers[j % conductor];
    for (int k = 0; k < data.phi; ++k) {
      if (row[k] != 0) result.coeffs_[k] += coefficients[j] * row[k];
    }
  }
  return result;
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

bool CycloScalar::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

CycloScalar CycloScalar::lifted(int m) const {
  require(m % conductor_ == 0, ErrorCode::Precondition,
          "lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  const int step = m / conductor_;
  std::vector<Rational> poly(static_cast<size_t>(m), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
  return from_polynomial(m, poly);
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& other) {
  if (other.conductor_ != conductor_) {
    const int m = lcm_int(conductor_, other.conductor_);
    *this = lifted(m);
    return *this += other.lifted(m);
  }
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& other) { return *this += -other; }

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ != b.conductor_) {
    const int m = lcm_int(a.conductor_, b.conductor_);
    return a.lifted(m) * b.lifted(m);
  }
  const int n = a.conductor_;
  const auto& data = data_for(n);
  const size_t phi = a.coeffs_.size();
  if (a.is_rational()) {
    CycloScalar result = b;
    for (auto& c : result.coeffs_) c *= a.coeffs_[0];
    return result;
  }
  if (b.is_rational()) return b * a;
  std::vector<Rational> product(2 * phi - 1, Rational(0));
  for (size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] != 0) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CycloScalar result = CycloScalar::zero(n);
  for (size_t k = 0; k < product.size(); ++k) {
    if (product[k] == 0) continue;
    if (k < phi) {
      result.coeffs_[k] += product[k];
      continue;
    }
    const auto& row = data.powers[k % n];
    for (size_t t = 0; t < phi; ++t) {
      if (row[t] != 0) result.coeffs_[t] += product[k] * row[t];
    }
  }
  return result;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& other) {
  *this = *this * other;
  return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& other) {
  *this = *this * other.inverse();
  return *this;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ != b.conductor_) {
    const int m = lcm_int(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
  if (is_rational()) return CycloScalar(Rational(1) / coeffs_[0], conductor_);
  if (auto j = root_of_unity_power()) return root_of_unity(conductor_, conductor_ - *j);
  // Solve (multiplication by this) * x = 1 over Q.
  const size_t phi = coeffs_.size();
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (size_t col = 0; col < phi; ++col) {
    CycloScalar image = *this * root_of_unity(conductor_, static_cast<long long>(col));
    for (size_t row = 0; row < phi; ++row) m[row][col] = image.coeffs_[row];
  }
  m[0][phi] = 1;
  for (size_t col = 0; col < phi; ++col) {
    size_t pivot = col;
    while (m[pivot][col] == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    Rational scale = Rational(1) / m[col][col];
    for (auto& v : m[col]) v *= scale;
    for (size_t row = 0; row < phi; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational factor = m[row][col];
      for (size_t k = col; k <= phi; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  CycloScalar result = CycloScalar::zero(conductor_);
  for (size_t k = 0; k < phi; ++k) result.coeffs_[k] = m[k][phi];
  return result;
}

std::optional<int> CycloScalar::root_of_unity_power() const {
  const auto& data = data_for(conductor_);
  for (int j = 0; j < conductor_; ++j) {
    const auto& row = data.powers[j];
    bool match = true;
    for (size_t k = 0; k < coeffs_.size() && match; ++k) match = coeffs_[k] == row[k];
    if (match) return j;
  }
  return std::nullopt;
}

std::string CycloScalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "z";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  if (conductor_ > 1) out << " [z^" << conductor_ << "=1]";
  return out.str();
}

}  // namespace mono
