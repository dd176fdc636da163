#include "uniflip/semilinear.hpp"

namespace uniflip {

SemilinearMap make_semilinear(const Field& F, Matrix mat, Tau tau) {
  if (mat.rows() != mat.cols()) fail(Errc::DimensionMismatch, "semilinear map matrix must be square");
  if (F.is_zero(det(F, mat))) fail(Errc::SingularMatrix, "semilinear map matrix must be invertible");
  return {std::move(mat), tau};
}

Vec apply(const Field& F, const SemilinearMap& f, const Vec& v) {
  Vec w = f.tau == Tau::Frobenius ? vec_conj(F, v) : v;
  return row_times_matrix(F, w, f.mat);
}

SemilinearMap compose(const Field& F, const SemilinearMap& f, const SemilinearMap& g) {
  // f(g(v)) = tau_f(tau_g(v) * M_g) * M_f = (tau_f tau_g)(v) * tau_f(M_g) * M_f
  Matrix mg = f.tau == Tau::Frobenius ? conj_entries(F, g.mat) : g.mat;
  Tau tau = f.tau == g.tau ? Tau::Identity : Tau::Frobenius;
  return {mat_mul(F, mg, f.mat), tau};
}

SemilinearMap square_map(const Field& F, const SemilinearMap& f) { return compose(F, f, f); }

SemilinearMap semilinear_inverse(const Field& F, const SemilinearMap& f) {
  Matrix minv = inverse(F, f.mat);
  if (f.tau == Tau::Frobenius) minv = conj_entries(F, minv);
  return {std::move(minv), f.tau};
}

Subspace apply_to_subspace(const Field& F, const SemilinearMap& f, const Subspace& U) {
  Matrix rows(0, U.ambient());
  for (std::size_t i = 0; i < U.dim(); ++i) rows.append_row(apply(F, f, U.basis_row(i)));
  return Subspace::span(F, rows);
}

int64_t similitude_factor(const HermitianSpace& space, const SemilinearMap& f) {
  const Field& F = space.field();
  if (f.mat.rows() != space.dim()) fail(Errc::DimensionMismatch, "map does not act on this space");
  // beta(f(b_i), f(b_j)) over the standard basis is M G sigma(M)^t; the map
  // is an a-similitude iff that matrix equals a * tau(G) entrywise.
  Matrix transformed = mat_mul(F, mat_mul(F, f.mat, space.gram()), conj_entries(F, transpose(f.mat)));
  Matrix target = f.tau == Tau::Frobenius ? conj_entries(F, space.gram()) : space.gram();
  Fq2 a{};
  bool found = false;
  for (std::size_t i = 0; i < target.rows() && !found; ++i)
    for (std::size_t j = 0; j < target.cols() && !found; ++j)
      if (!F.is_zero(target.at(i, j))) {
        a = F.mul(transformed.at(i, j), F.inv(target.at(i, j)));
        found = true;
      }
  if (!found || !F.in_base(a) || F.is_zero(a))
    fail(Errc::NotSimilitude, "no similitude factor exists");
  if (transformed != mat_scale(F, a, target))
    fail(Errc::NotSimilitude, "Gram identity fails");
  return a.a0;
}

std::optional<Fq2> projective_involution_scalar(const Field& F, const SemilinearMap& f) {
  SemilinearMap sq = square_map(F, f);
  Fq2 lambda;
  if (!is_scalar_matrix(F, sq.mat, &lambda)) return std::nullopt;
  return lambda;
}

SesquiForm beta_phi(const HermitianSpace& space, const SemilinearMap& f) {
  const Field& F = space.field();
  SemilinearMap sq = square_map(F, f);
  if (sq.mat != Matrix::identity(space.dim()))
    fail(Errc::NotInvolution, "beta_phi requires f^2 = id on V");
  // Entry (i, j) is beta(b_i, f(b_j)); f(b_j) is row j of the matrix.
  Matrix gram = mat_mul(F, space.gram(), transpose(conj_entries(F, f.mat)));
  Twist twist = f.tau == Tau::Frobenius ? Twist::Identity : Twist::Frobenius;
  return {std::move(gram), twist};
}

InducedFormKind induced_form_kind(const SesquiForm& form) {
  return form.twist == Twist::Identity ? InducedFormKind::Bilinear : InducedFormKind::Sesquilinear;
}

Fq2 q_phi(const HermitianSpace& space, const SesquiForm& bphi, const Vec& v) {
  const Field& F = space.field();
  return F.mul(F.from_base(F.fq_inv(2)), eval_form(F, bphi, v, v));
}

}  // namespace uniflip
