#pragma once

#include <cstddef>
#include <vector>

#include "uniflip/field.hpp"

namespace uniflip {

using Vec = std::vector<Fq2>;

Vec vec_add(const Field& F, const Vec& u, const Vec& v);
Vec vec_sub(const Field& F, const Vec& u, const Vec& v);
Vec vec_scale(const Field& F, Fq2 c, const Vec& u);
Vec vec_conj(const Field& F, const Vec& u);
bool vec_is_zero(const Vec& u);
Vec unit_vector(std::size_t dim, std::size_t i);

/// Dense row-major matrix over F_{q^2}.  Vectors are rows throughout the
/// library; a linear map T acts as v -> v*T.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fq2& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Fq2& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  void append_row(const Vec& v);

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend std::strong_ordering operator<=>(const Matrix& x, const Matrix& y);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq2> a_;
};

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B);
Matrix mat_add(const Field& F, const Matrix& A, const Matrix& B);
Matrix mat_sub(const Field& F, const Matrix& A, const Matrix& B);
Matrix mat_scale(const Field& F, Fq2 c, const Matrix& A);
Matrix transpose(const Matrix& A);
Matrix conj_entries(const Field& F, const Matrix& A);
Vec row_times_matrix(const Field& F, const Vec& v, const Matrix& A);

bool is_scalar_matrix(const Field& F, const Matrix& A, Fq2* scalar = nullptr);

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, strictly increasing
};

RrefResult rref(const Field& F, Matrix A);
std::size_t rank(const Field& F, const Matrix& A);
Fq2 det(const Field& F, Matrix A);
/// Gauss-Jordan inverse; throws SingularMatrix.
Matrix inverse(const Field& F, const Matrix& A);
/// Rows spanning {x : A x^t = 0}, RREF-canonical.
Matrix right_nullspace(const Field& F, const Matrix& A);

/// A subspace of F_{q^2}^m held as its unique RREF basis, so equality of
/// values is equality of subspaces.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const Field& F, const Matrix& rows);
  static Subspace span(const Field& F, const std::vector<Vec>& rows, std::size_t ambient);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Field& F, const Vec& v) const;
  bool contains(const Field& F, const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& x, const Subspace& y);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
};

Subspace sum(const Field& F, const Subspace& U, const Subspace& W);
Subspace intersect(const Field& F, const Subspace& U, const Subspace& W);

/// Vectors of U enumerated in the canonical order: coefficient tuples with
/// respect to the RREF basis, counted with the first basis row least
/// significant.  Index 0 is the zero vector.
Vec vector_at(const Field& F, const Subspace& U, uint64_t index);
uint64_t vector_count(const Field& F, const Subspace& U);

}  // namespace uniflip
