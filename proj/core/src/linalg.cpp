#include "uniflip/linalg.hpp"

#include <algorithm>

namespace uniflip {

Vec vec_add(const Field& F, const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(Errc::DimensionMismatch, "vector lengths differ");
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = F.add(u[i], v[i]);
  return out;
}

Vec vec_sub(const Field& F, const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(Errc::DimensionMismatch, "vector lengths differ");
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = F.sub(u[i], v[i]);
  return out;
}

Vec vec_scale(const Field& F, Fq2 c, const Vec& u) {
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = F.mul(c, u[i]);
  return out;
}

Vec vec_conj(const Field& F, const Vec& u) {
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = F.frobenius(u[i]);
  return out;
}

bool vec_is_zero(const Vec& u) {
  for (const Fq2& x : u)
    if (x != Fq2{}) return false;
  return true;
}

Vec unit_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = {1, 0};
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = {1, 0};
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

void Matrix::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "row length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

std::strong_ordering operator<=>(const Matrix& x, const Matrix& y) {
  if (auto c = x.rows_ <=> y.rows_; c != 0) return c;
  if (auto c = x.cols_ <=> y.cols_; c != 0) return c;
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    if (auto c = x.a_[i] <=> y.a_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) fail(Errc::DimensionMismatch, "matrix product shapes");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      Fq2 a = A.at(i, k);
      if (F.is_zero(a)) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
    }
  return C;
}

Matrix mat_add(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) fail(Errc::DimensionMismatch, "matrix sum shapes");
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = F.add(A.at(i, j), B.at(i, j));
  return C;
}

Matrix mat_sub(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) fail(Errc::DimensionMismatch, "matrix diff shapes");
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = F.sub(A.at(i, j), B.at(i, j));
  return C;
}

Matrix mat_scale(const Field& F, Fq2 c, const Matrix& A) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = F.mul(c, A.at(i, j));
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix C(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(j, i) = A.at(i, j);
  return C;
}

Matrix conj_entries(const Field& F, const Matrix& A) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = F.frobenius(A.at(i, j));
  return C;
}

Vec row_times_matrix(const Field& F, const Vec& v, const Matrix& A) {
  if (v.size() != A.rows()) fail(Errc::DimensionMismatch, "vector-matrix shapes");
  Vec out(A.cols());
  for (std::size_t k = 0; k < A.rows(); ++k) {
    if (F.is_zero(v[k])) continue;
    for (std::size_t j = 0; j < A.cols(); ++j)
      out[j] = F.add(out[j], F.mul(v[k], A.at(k, j)));
  }
  return out;
}

bool is_scalar_matrix(const Field& F, const Matrix& A, Fq2* scalar) {
  if (A.rows() != A.cols() || A.rows() == 0) return false;
  Fq2 d = A.at(0, 0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (i == j && A.at(i, j) != d) return false;
      if (i != j && !F.is_zero(A.at(i, j))) return false;
    }
  if (scalar) *scalar = d;
  return true;
}

RrefResult rref(const Field& F, Matrix A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
    std::size_t sel = r;
    while (sel < A.rows() && F.is_zero(A.at(sel, col))) ++sel;
    if (sel == A.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(sel, j), A.at(r, j));
    Fq2 inv_pivot = F.inv(A.at(r, col));
    for (std::size_t j = col; j < A.cols(); ++j) A.at(r, j) = F.mul(inv_pivot, A.at(r, j));
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r || F.is_zero(A.at(i, col))) continue;
      Fq2 factor = A.at(i, col);
      for (std::size_t j = col; j < A.cols(); ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(factor, A.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(A), std::move(pivots)};
}

std::size_t rank(const Field& F, const Matrix& A) { return rref(F, A).pivots.size(); }

Fq2 det(const Field& F, Matrix A) {
  if (A.rows() != A.cols()) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
  Fq2 d = F.one();
  std::size_t n = A.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && F.is_zero(A.at(sel, col))) ++sel;
    if (sel == n) return F.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A.at(sel, j), A.at(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, A.at(col, col));
    Fq2 inv_pivot = F.inv(A.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (F.is_zero(A.at(i, col))) continue;
      Fq2 factor = F.mul(A.at(i, col), inv_pivot);
      for (std::size_t j = col; j < n; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(factor, A.at(col, j)));
    }
  }
  return d;
}

Matrix inverse(const Field& F, const Matrix& A) {
  if (A.rows() != A.cols()) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = A.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = F.one();
  }
  RrefResult rr = rref(F, std::move(aug));
  if (rr.pivots.size() != n || rr.pivots.back() != n - 1)
    fail(Errc::SingularMatrix, "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
  return inv;
}

Matrix right_nullspace(const Field& F, const Matrix& A) {
  RrefResult rr = rref(F, A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  Matrix out(0, A.cols());
  for (std::size_t free_col = 0; free_col < A.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec x(A.cols());
    x[free_col] = {1, 0};
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      x[rr.pivots[i]] = F.neg(rr.mat.at(i, free_col));
    out.append_row(x);
  }
  return rref(F, std::move(out)).mat;
}

Subspace Subspace::span(const Field& F, const Matrix& rows) {
  RrefResult rr = rref(F, rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = Matrix(rr.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) s.basis_.set_row(i, rr.mat.row(i));
  return s;
}

Subspace Subspace::span(const Field& F, const std::vector<Vec>& rows, std::size_t ambient) {
  if (rows.empty()) return zero(ambient);
  return span(F, Matrix::from_rows(rows));
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

bool Subspace::contains(const Field& F, const Vec& v) const {
  if (v.size() != ambient_) fail(Errc::DimensionMismatch, "ambient dimension mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // pivot of row i is the first nonzero column; basis is RREF
    std::size_t p = 0;
    while (p < ambient_ && F.is_zero(basis_.at(i, p))) ++p;
    if (p == ambient_) continue;
    Fq2 c = w[p];
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = F.sub(w[j], F.mul(c, basis_.at(i, j)));
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(F, other.basis_row(i))) return false;
  return true;
}

std::strong_ordering operator<=>(const Subspace& x, const Subspace& y) {
  if (auto c = x.ambient_ <=> y.ambient_; c != 0) return c;
  if (auto c = x.dim() <=> y.dim(); c != 0) return c;
  return x.basis_ <=> y.basis_;
}

Subspace sum(const Field& F, const Subspace& U, const Subspace& W) {
  if (U.ambient() != W.ambient()) fail(Errc::DimensionMismatch, "ambient dimension mismatch");
  Matrix stacked(0, U.ambient());
  for (std::size_t i = 0; i < U.dim(); ++i) stacked.append_row(U.basis_row(i));
  for (std::size_t i = 0; i < W.dim(); ++i) stacked.append_row(W.basis_row(i));
  return Subspace::span(F, stacked);
}

Subspace intersect(const Field& F, const Subspace& U, const Subspace& W) {
  if (U.ambient() != W.ambient()) fail(Errc::DimensionMismatch, "ambient dimension mismatch");
  // Zassenhaus: rows [u|u] and [w|0]; rows with zero left half carry the
  // intersection in their right half.
  std::size_t m = U.ambient();
  Matrix block(0, 2 * m);
  for (std::size_t i = 0; i < U.dim(); ++i) {
    Vec u = U.basis_row(i);
    Vec row(2 * m);
    for (std::size_t j = 0; j < m; ++j) row[j] = row[m + j] = u[j];
    block.append_row(row);
  }
  for (std::size_t i = 0; i < W.dim(); ++i) {
    Vec w = W.basis_row(i);
    Vec row(2 * m);
    for (std::size_t j = 0; j < m; ++j) row[j] = w[j];
    block.append_row(row);
  }
  RrefResult rr = rref(F, std::move(block));
  Matrix inter(0, m);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] < m) continue;
    Vec right(m);
    for (std::size_t j = 0; j < m; ++j) right[j] = rr.mat.at(i, m + j);
    inter.append_row(right);
  }
  return Subspace::span(F, inter);
}

Vec vector_at(const Field& F, const Subspace& U, uint64_t index) {
  Vec v(U.ambient());
  uint64_t Q = F.order();
  for (std::size_t i = 0; i < U.dim() && index; ++i) {
    Fq2 c = F.element_at(index % Q);
    index /= Q;
    if (!F.is_zero(c)) {
      for (std::size_t j = 0; j < U.ambient(); ++j)
        v[j] = F.add(v[j], F.mul(c, U.basis().at(i, j)));
    }
  }
  return v;
}

uint64_t vector_count(const Field& F, const Subspace& U) {
  uint64_t n = 1;
  for (std::size_t i = 0; i < U.dim(); ++i) n *= F.order();
  return n;
}

}  // namespace uniflip
