#include "uniflip/hermitian.hpp"

namespace uniflip {

Fq2 eval_form(const Field& F, const SesquiForm& form, const Vec& u, const Vec& v) {
  if (u.size() != form.gram.rows() || v.size() != form.gram.cols())
    fail(Errc::DimensionMismatch, "form evaluation shapes");
  Vec w = form.twist == Twist::Frobenius ? vec_conj(F, v) : v;
  Fq2 s = F.zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (F.is_zero(u[i])) continue;
    Fq2 acc = F.zero();
    for (std::size_t j = 0; j < w.size(); ++j)
      acc = F.add(acc, F.mul(form.gram.at(i, j), w[j]));
    s = F.add(s, F.mul(u[i], acc));
  }
  return s;
}

Matrix gram_on(const Field& F, const SesquiForm& form, const Matrix& B) {
  Matrix Bt = transpose(B);
  if (form.twist == Twist::Frobenius) Bt = conj_entries(F, Bt);
  return mat_mul(F, mat_mul(F, B, form.gram), Bt);
}

HermitianSpace::HermitianSpace(int n, const Field& field)
    : n_(n), field_(field), gram_(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n)) {
  if (n < 1) fail(Errc::DimensionMismatch, "rank must be at least 1");
  for (int i = 0; i < n; ++i) {
    gram_.at(i, n + i) = field_.one();
    gram_.at(n + i, i) = field_.one();
  }
}

HermitianSpace standard_space(int n, const Field& field) { return HermitianSpace(n, field); }

Fq2 HermitianSpace::beta(const Vec& u, const Vec& v) const {
  return eval_form(field_, beta_form(), u, v);
}

Subspace perp(const Field& F, const SesquiForm& form, const Subspace& U) {
  if (U.ambient() != form.gram.cols()) fail(Errc::DimensionMismatch, "perp ambient mismatch");
  if (U.dim() == 0) return Subspace::full(U.ambient());
  // form(u, v) = (u G) twist(v)^t, so twist(v) ranges over the right
  // nullspace of U.basis * G.
  Matrix A = mat_mul(F, U.basis(), form.gram);
  Matrix N = right_nullspace(F, A);
  if (form.twist == Twist::Frobenius) N = conj_entries(F, N);
  return Subspace::span(F, N);
}

Subspace radical(const Field& F, const SesquiForm& form, const Subspace& U) {
  return intersect(F, U, perp(F, form, U));
}

bool is_nondegenerate_on(const Field& F, const SesquiForm& form, const Subspace& U) {
  if (U.dim() == 0) return true;
  return !F.is_zero(det(F, gram_on(F, form, U.basis())));
}

bool is_totally_isotropic(const HermitianSpace& space, const Subspace& U) {
  const Field& F = space.field();
  Matrix g = gram_on(F, space.beta_form(), U.basis());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!F.is_zero(g.at(i, j))) return false;
  return true;
}

}  // namespace uniflip
