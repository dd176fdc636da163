#include "uniflip/sampling.hpp"

namespace uniflip {

Vec Sampler::vector(const Field& F, std::size_t dim) {
  Vec v(dim);
  for (auto& x : v) x = element(F);
  return v;
}

Vec Sampler::nonzero_vector(const Field& F, std::size_t dim) {
  for (;;) {
    Vec v = vector(F, dim);
    if (!vec_is_zero(v)) return v;
  }
}

Matrix Sampler::matrix(const Field& F, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = element(F);
  return m;
}

Matrix Sampler::invertible_matrix(const Field& F, std::size_t n) {
  for (;;) {
    Matrix m = matrix(F, n, n);
    if (!F.is_zero(det(F, m))) return m;
  }
}

Subspace Sampler::subspace(const Field& F, std::size_t ambient, std::size_t dim) {
  for (;;) {
    Matrix rows(0, ambient);
    for (std::size_t i = 0; i < dim; ++i) rows.append_row(vector(F, ambient));
    Subspace s = Subspace::span(F, rows);
    if (s.dim() == dim) return s;
  }
}

std::vector<Vec> Sampler::hyperbolic_basis(const HermitianSpace& space) {
  const Field& F = space.field();
  std::vector<Vec> es, fs;
  Subspace P = Subspace::full(space.dim());
  for (int i = 0; i < space.n(); ++i) {
    // Random singular vector in the remaining orthogonal complement.
    Vec u;
    for (;;) {
      Vec c = vector(F, P.dim());
      u = row_times_matrix(F, c, P.basis());
      if (!vec_is_zero(u) && F.is_zero(space.beta(u, u))) break;
    }
    // Random partner, scaled to pairing 1 and corrected to be singular.
    Vec w;
    for (;;) {
      Vec c = vector(F, P.dim());
      w = row_times_matrix(F, c, P.basis());
      if (!F.is_zero(space.beta(u, w))) break;
    }
    w = vec_scale(F, F.frobenius(F.inv(space.beta(u, w))), w);
    // beta(w, w) is rational; subtracting (beta(w,w)/2) u kills it.
    Fq2 t = F.mul(F.from_base(F.fq_inv(2)), space.beta(w, w));
    Vec fvec = vec_sub(F, w, vec_scale(F, t, u));
    es.push_back(u);
    fs.push_back(fvec);
    Subspace pair = Subspace::span(F, {u, fvec}, space.dim());
    P = intersect(F, P, perp(F, space.beta_form(), pair));
  }
  es.insert(es.end(), fs.begin(), fs.end());
  return es;
}

Matrix Sampler::unitary(const HermitianSpace& space) {
  return Matrix::from_rows(hyperbolic_basis(space));
}

}  // namespace uniflip
