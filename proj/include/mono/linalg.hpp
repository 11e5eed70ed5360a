#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mono/cyclotomic.hpp"

namespace mono {

// Dense matrix over Q(zeta_N), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, int conductor = 1);
  static Matrix identity(size_t n, int conductor = 1);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }
  CycloScalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix column(size_t c) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycloScalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<CycloScalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                     // reduced row echelon form
  std::vector<size_t> pivot_columns;  // one per nonzero row
};

RowEchelon row_reduce(Matrix m);
size_t rank(const Matrix& m);
// Columns form a basis of the null space. Each basis vector is 1 at its own
// free column and 0 at the other free columns.
Matrix kernel(const Matrix& m);
// Some X with A X = B; throws Inconsistent when none exists.
Matrix solve(const Matrix& a, const Matrix& b);
// Throws Inconsistent for singular input.
Matrix inverse(const Matrix& a);

// Subspace with a basis in which the entries at coordinate_rows form the
// identity, so coordinates of a member vector are read off directly.
struct Subspace {
  Matrix basis;                        // ambient_dim x dim
  std::vector<size_t> coordinate_rows;
  size_t dim() const { return basis.cols(); }
};
Subspace null_space(const Matrix& m);

struct SparseEntry {
  uint32_t row;
  CycloScalar value;
};

// Column-oriented sparse matrix; entries within a column sorted by row after
// normalize().
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const std::vector<SparseEntry>& column(size_t c) const { return columns_[c]; }
  std::vector<SparseEntry>& column(size_t c) { return columns_[c]; }
  void add(size_t row, size_t col, const CycloScalar& value);
  // Merges repeated rows and drops zeros.
  void normalize();
  size_t nonzeros() const;
  bool is_zero() const;

  Matrix to_dense(int conductor) const;
  static SparseMatrix from_dense(const Matrix& m);
  // this * right
  SparseMatrix multiply(const SparseMatrix& right) const;
  // Keeps the listed rows and columns, renumbered in the given order.
  SparseMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

  // Compares after merging repeated rows and dropping zeros.
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<std::vector<SparseEntry>> columns_;
};

// Prime p = 1 mod N together with a primitive N-th root of unity mod p; the
// reduction map sends zeta_N to that root.
class PrimeField {
 public:
  // attempt selects the attempt-th such prime below 2^31.
  PrimeField(int conductor, int attempt);
  uint32_t prime() const { return p_; }
  // Empty when a denominator vanishes mod p.
  std::optional<uint32_t> reduce(const CycloScalar& x) const;

 private:
  int conductor_;
  uint32_t p_;
  std::vector<uint32_t> root_powers_;
};

uint32_t pow_mod(uint64_t base, uint64_t exponent, uint32_t p);
// Rank over F_p of a dense row-major matrix; the input is overwritten.
size_t rank_mod_p(std::vector<uint32_t>& data, size_t rows, size_t cols, uint32_t p);
// A lower bound for the rank over Q(zeta_N): the rank of the reduction,
// multiplied by a random projection when large. Empty if the reduction is
// undefined.
std::optional<size_t> rank_lower_bound(const SparseMatrix& m, const PrimeField& field, uint64_t seed);

}  // namespace mono
