#pragma once

#include "uniflip/linalg.hpp"

namespace uniflip {

enum class Twist { Identity, Frobenius };

/// A reflexive form given by its Gram matrix and the automorphism applied to
/// the second argument: pairing(u, v) = u * gram * twist(v)^t.  beta itself
/// has twist Frobenius; the induced form of a sigma-semilinear flip has twist
/// Identity (it is bilinear).
struct SesquiForm {
  Matrix gram;
  Twist twist = Twist::Frobenius;
};

Fq2 eval_form(const Field& F, const SesquiForm& form, const Vec& u, const Vec& v);
/// Gram matrix of the form restricted to the rows of B: B * G * twist(B)^t.
Matrix gram_on(const Field& F, const SesquiForm& form, const Matrix& B);

/// Non-degenerate unitary space of dimension 2n with the hyperbolic Gram
/// matrix in the standard ordered basis e_1..e_n, f_1..f_n.
class HermitianSpace {
 public:
  HermitianSpace(int n, const Field& field);

  int n() const { return n_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(n_); }
  const Field& field() const { return field_; }
  const Matrix& gram() const { return gram_; }
  SesquiForm beta_form() const { return {gram_, Twist::Frobenius}; }

  Fq2 beta(const Vec& u, const Vec& v) const;

  Vec e(int i) const { return unit_vector(dim(), static_cast<std::size_t>(i)); }
  Vec f(int i) const { return unit_vector(dim(), static_cast<std::size_t>(n_ + i)); }

 private:
  int n_;
  Field field_;
  Matrix gram_;
};

HermitianSpace standard_space(int n, const Field& field);

/// {v : form(u, v) = 0 for all u in U}.
Subspace perp(const Field& F, const SesquiForm& form, const Subspace& U);
Subspace radical(const Field& F, const SesquiForm& form, const Subspace& U);
bool is_nondegenerate_on(const Field& F, const SesquiForm& form, const Subspace& U);
bool is_totally_isotropic(const HermitianSpace& space, const Subspace& U);

}  // namespace uniflip
