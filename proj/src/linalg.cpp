#include "mono/linalg.hpp"

#include <algorithm>
#include <random>

#include "mono/error.hpp"

namespace mono {

Matrix::Matrix(size_t rows, size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, CycloScalar::zero(conductor)) {}

Matrix Matrix::identity(size_t n, int conductor) {
  Matrix m(n, n, conductor);
  for (size_t i = 0; i < n; ++i) m(i, i) = CycloScalar(1, conductor);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, conductor_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::column(size_t c) const {
  Matrix v(rows_, 1, conductor_);
  for (size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycloScalar& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::Precondition, "matrix dimensions do not match");
  Matrix c(a.rows_, b.cols_, lcm_int(a.conductor_, b.conductor_));
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      const CycloScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::Precondition, "matrix dimensions do not match");
  Matrix c = a;
  for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + CycloScalar(-1) * b; }

Matrix operator*(const CycloScalar& s, const Matrix& m) {
  Matrix c = m;
  for (auto& x : c.data_) x = s * x;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::Precondition, "hstack needs equal row counts");
  Matrix c(a.rows(), a.cols() + b.cols(), lcm_int(a.conductor(), b.conductor()));
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t j = 0; j < a.cols(); ++j) c(r, j) = a(r, j);
    for (size_t j = 0; j < b.cols(); ++j) c(r, a.cols() + j) = b(r, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorCode::Precondition, "vstack needs equal column counts");
  Matrix c(a.rows() + b.rows(), a.cols(), lcm_int(a.conductor(), b.conductor()));
  for (size_t j = 0; j < a.cols(); ++j) {
    for (size_t r = 0; r < a.rows(); ++r) c(r, j) = a(r, j);
    for (size_t r = 0; r < b.rows(); ++r) c(a.rows() + r, j) = b(r, j);
  }
  return c;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon result;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const CycloScalar scale = m(row, col).inverse();
    for (size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * scale;
    }
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycloScalar factor = m(r, col);
      for (size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
    }
    result.pivot_columns.push_back(col);
    ++row;
  }
  result.reduced = std::move(m);
  return result;
}

size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

Subspace null_space(const Matrix& m) {
  const RowEchelon echelon = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (size_t c : echelon.pivot_columns) is_pivot[c] = 1;
  Subspace space;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) space.coordinate_rows.push_back(c);
  }
  space.basis = Matrix(m.cols(), space.coordinate_rows.size(), m.conductor());
  for (size_t k = 0; k < space.coordinate_rows.size(); ++k) {
    const size_t free = space.coordinate_rows[k];
    space.basis(free, k) = CycloScalar(1, m.conductor());
    for (size_t r = 0; r < echelon.pivot_columns.size(); ++r) {
      space.basis(echelon.pivot_columns[r], k) = -echelon.reduced(r, free);
    }
  }
  return space;
}

Matrix kernel(const Matrix& m) { return null_space(m).basis; }

Matrix solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::Precondition, "solve needs matching row counts");
  const RowEchelon echelon = row_reduce(hstack(a, b));
  Matrix x(a.cols(), b.cols(), lcm_int(a.conductor(), b.conductor()));
  for (size_t r = 0; r < echelon.pivot_columns.size(); ++r) {
    const size_t pc = echelon.pivot_columns[r];
    if (pc >= a.cols()) fail(ErrorCode::Inconsistent, "linear system has no solution");
    for (size_t j = 0; j < b.cols(); ++j) x(pc, j) = echelon.reduced(r, a.cols() + j);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  require(a.rows() == a.cols(), ErrorCode::Precondition, "inverse of a non-square matrix");
  require(rank(a) == a.rows(), ErrorCode::Inconsistent, "matrix is singular");
  return solve(a, Matrix::identity(a.rows(), a.conductor()));
}

// ------------------------------------------------------------------ sparse

void SparseMatrix::add(size_t row, size_t col, const CycloScalar& value) {
  if (value.is_zero()) return;
  columns_[col].push_back(SparseEntry{static_cast<uint32_t>(row), value});
}

void SparseMatrix::normalize() {
  for (auto& column : columns_) {
    if (column.size() < 2) {
      if (column.size() == 1 && column[0].value.is_zero()) column.clear();
      continue;
    }
    std::stable_sort(column.begin(), column.end(),
                     [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    std::vector<SparseEntry> merged;
    for (auto& entry : column) {
      if (!merged.empty() && merged.back().row == entry.row) {
        merged.back().value += entry.value;
      } else {
        merged.push_back(std::move(entry));
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const SparseEntry& e) { return e.value.is_zero(); }),
                 merged.end());
    column = std::move(merged);
  }
}

size_t SparseMatrix::nonzeros() const {
  size_t count = 0;
  for (const auto& column : columns_) count += column.size();
  return count;
}

bool SparseMatrix::is_zero() const {
  for (const auto& column : columns_) {
    for (const auto& entry : column) {
      if (!entry.value.is_zero()) return false;
    }
  }
  return true;
}

Matrix SparseMatrix::to_dense(int conductor) const {
  Matrix m(rows_, cols_, conductor);
  for (size_t c = 0; c < cols_; ++c) {
    for (const auto& entry : columns_[c]) m(entry.row, c) += entry.value;
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (size_t c = 0; c < m.cols(); ++c) {
    for (size_t r = 0; r < m.rows(); ++r) s.add(r, c, m(r, c));
  }
  return s;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& right) const {
  require(cols_ == right.rows_, ErrorCode::Precondition, "sparse dimensions do not match");
  SparseMatrix product(rows_, right.cols_);
  for (size_t c = 0; c < right.cols_; ++c) {
    for (const auto& outer : right.columns_[c]) {
      for (const auto& inner : columns_[outer.row]) product.add(inner.row, c, inner.value * outer.value);
    }
  }
  product.normalize();
  return product;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
  std::vector<int64_t> row_map(rows_, -1);
  for (size_t i = 0; i < rows.size(); ++i) row_map[rows[i]] = static_cast<int64_t>(i);
  SparseMatrix sub(rows.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& entry : columns_[cols[j]]) {
      if (row_map[entry.row] >= 0) sub.columns_[j].push_back(SparseEntry{static_cast<uint32_t>(row_map[entry.row]), entry.value});
    }
  }
  return sub;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  SparseMatrix x = a, y = b;
  x.normalize();
  y.normalize();
  for (size_t c = 0; c < x.cols_; ++c) {
    const auto& u = x.columns_[c];
    const auto& v = y.columns_[c];
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i].row != v[i].row || !(u[i].value == v[i].value)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- modular

uint32_t pow_mod(uint64_t base, uint64_t exponent, uint32_t p) {
  uint64_t result = 1;
  base %= p;
  while (exponent) {
    if (exponent & 1) result = result * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return static_cast<uint32_t>(result);
}

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % small == 0) return n == small;
  }
  uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint32_t a : {2u, 7u, 61u}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

uint32_t primitive_root_of_unity(int order, uint32_t p) {
  std::vector<uint32_t> factors;
  uint32_t m = p - 1;
  for (uint32_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (uint32_t g = 2;; ++g) {
    bool generator = true;
    for (uint32_t q : factors) generator = generator && pow_mod(g, (p - 1) / q, p) != 1;
    if (generator) return pow_mod(g, (p - 1) / static_cast<uint32_t>(order), p);
  }
}

uint32_t reduce_rational(const Rational& q, uint32_t p, bool& ok) {
  const mpz_class num = q.get_num() % p;
  const mpz_class den = q.get_den() % p;
  if (den == 0) {
    ok = false;
    return 0;
  }
  uint64_t n = mpz_class((num + p) % p).get_ui();
  uint64_t d = den.get_ui();
  return static_cast<uint32_t>(n * pow_mod(d, p - 2, p) % p);
}

}  // namespace

PrimeField::PrimeField(int conductor, int attempt) : conductor_(conductor) {
  const uint64_t n = static_cast<uint64_t>(conductor);
  uint64_t candidate = ((1ULL << 31) - 1) / n * n + 1;
  if (candidate >= (1ULL << 31)) candidate -= n;
  int found = -1;
  while (true) {
    if (is_prime(static_cast<uint32_t>(candidate)) && ++found == attempt) break;
    candidate -= n;
  }
  p_ = static_cast<uint32_t>(candidate);
  const uint32_t zeta = primitive_root_of_unity(conductor, p_);
  root_powers_.resize(conductor);
  uint64_t power = 1;
  for (int j = 0; j < conductor; ++j) {
    root_powers_[j] = static_cast<uint32_t>(power);
    power = power * zeta % p_;
  }
}

std::optional<uint32_t> PrimeField::reduce(const CycloScalar& x) const {
  require(conductor_ % x.conductor() == 0, ErrorCode::Precondition, "scalar conductor does not divide the field's");
  const int step = conductor_ / x.conductor();
  uint64_t total = 0;
  bool ok = true;
  const auto& coeffs = x.coefficients();
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const uint64_t c = reduce_rational(coeffs[k], p_, ok);
    total = (total + c * root_powers_[(k * step) % conductor_]) % p_;
  }
  if (!ok) return std::nullopt;
  return static_cast<uint32_t>(total);
}

size_t rank_mod_p(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p) {
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && data[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (size_t j = col; j < cols; ++j) std::swap(data[pivot * cols + j], data[rank * cols + j]);
    }
    uint32_t* pivot_row = &data[rank * cols];
    const uint64_t inv = pow_mod(pivot_row[col], p - 2, p);
    for (size_t j = col; j < cols; ++j) pivot_row[j] = static_cast<uint32_t>(pivot_row[j] * inv % p);
    for (size_t r = rank + 1; r < rows; ++r) {
      uint32_t* row = &data[r * cols];
      const uint64_t factor = row[col];
      if (factor == 0) continue;
      const uint64_t negated = p - factor;
      for (size_t j = col; j < cols; ++j) {
        if (pivot_row[j] != 0) row[j] = static_cast<uint32_t>((row[j] + negated * pivot_row[j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<size_t> rank_lower_bound(const SparseMatrix& m, const PrimeField& field, uint64_t seed) {
  const uint32_t p = field.prime();
  const size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  constexpr size_t kDirectLimit = 8u << 20;
  std::vector<uint32_t> dense;
  size_t out_rows = rows, out_cols = cols;
  if (rows * cols <= kDirectLimit) {
    dense.assign(rows * cols, 0);
    for (size_t c = 0; c < cols; ++c) {
      for (const auto& entry : m.column(c)) {
        auto v = field.reduce(entry.value);
        if (!v) return std::nullopt;
        uint32_t& slot = dense[entry.row * cols + c];
        slot = static_cast<uint32_t>((static_cast<uint64_t>(slot) + *v) % p);
      }
    }
  } else {
    // rank(M R) <= rank(M) for every R; a random R keeps the rank with high
    // probability.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> coefficient(0, p - 1);
    if (cols > rows) {
      out_cols = rows;
      dense.assign(rows * out_cols, 0);
      std::vector<uint32_t> weights(out_cols);
      for (size_t c = 0; c < cols; ++c) {
        for (auto& w : weights) w = coefficient(rng);
        for (const auto& entry : m.column(c)) {
          auto v = field.reduce(entry.value);
          if (!v) return std::nullopt;
          uint32_t* row = &dense[entry.row * out_cols];
          for (size_t k = 0; k < out_cols; ++k) {
            row[k] = static_cast<uint32_t>((row[k] + static_cast<uint64_t>(*v) * weights[k]) % p);
          }
        }
      }
    } else {
      out_rows = cols;
      dense.assign(out_rows * cols, 0);
      std::vector<uint32_t> weights(rows * out_rows);
      for (auto& w : weights) w = coefficient(rng);
      for (size_t c = 0; c < cols; ++c) {
        for (const auto& entry : m.column(c)) {
          auto v = field.reduce(entry.value);
          if (!v) return std::nullopt;
          for (size_t k = 0; k < out_rows; ++k) {
            uint32_t& slot = dense[k * cols + c];
            slot = static_cast<uint32_t>((slot + static_cast<uint64_t>(*v) * weights[entry.row * out_rows + k]) % p);
          }
        }
      }
    }
  }
  return rank_mod_p(dense, out_rows, out_cols, p);
}

}  // namespace mono
