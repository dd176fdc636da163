#pragma once

#include <optional>

#include "uniflip/hermitian.hpp"

namespace uniflip {

enum class Tau { Identity, Frobenius };

/// Semilinear transformation f(v) = tau(v) * mat, tau applied entrywise.
/// Row i of mat is the image of the i-th standard basis vector.
struct SemilinearMap {
  Matrix mat;
  Tau tau = Tau::Identity;
};

/// Checks invertibility; throws SingularMatrix.
SemilinearMap make_semilinear(const Field& F, Matrix mat, Tau tau);

Vec apply(const Field& F, const SemilinearMap& f, const Vec& v);
/// compose(f, g)(v) = f(g(v)); the automorphism parts compose mod 2.
SemilinearMap compose(const Field& F, const SemilinearMap& f, const SemilinearMap& g);
SemilinearMap square_map(const Field& F, const SemilinearMap& f);
SemilinearMap semilinear_inverse(const Field& F, const SemilinearMap& f);
Subspace apply_to_subspace(const Field& F, const SemilinearMap& f, const Subspace& U);

/// The factor a in beta(f(u), f(v)) = a * tau(beta(u, v)), as an F_q residue.
/// Decided exactly through the Gram identity on the standard basis; throws
/// NotSimilitude when no such a exists.
int64_t similitude_factor(const HermitianSpace& space, const SemilinearMap& f);

/// The scalar lambda with f^2 = lambda * id, when f is a projective
/// involution; empty otherwise.
std::optional<Fq2> projective_involution_scalar(const Field& F, const SemilinearMap& f);

enum class InducedFormKind { Bilinear, Sesquilinear };

/// The induced form beta_f(u, v) = beta(u, f(v)), defined for involutions
/// only (throws NotInvolution).  Bilinear when f is sigma-semilinear,
/// sigma-sesquilinear when f is linear; the returned SesquiForm twist
/// reflects that.
SesquiForm beta_phi(const HermitianSpace& space, const SemilinearMap& f);
InducedFormKind induced_form_kind(const SesquiForm& form);

/// Q_phi(v) = beta_phi(v, v) / 2.
Fq2 q_phi(const HermitianSpace& space, const SesquiForm& bphi, const Vec& v);

}  // namespace uniflip
