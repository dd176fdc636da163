#pragma once

#include <optional>
#include <string>

#include "uniflip/building.hpp"

namespace uniflip {

enum class FlipClass {
  I_LinearIsometry,
  II_LinearAntiIsometry,
  III_SemilinearSquare,
  IV_SemilinearNonSquare,
};

const char* flip_class_name(FlipClass c);                 // "I".."IV"
std::optional<FlipClass> parse_flip_class(const std::string& s);

/// A classified flip: the normalized representative (map^2 = id), the tag of
/// the matching case, a witness hyperbolic basis e_1..e_n, f_1..f_n whose
/// Gram matrix is the standard one and on which the case's relations hold
/// exactly, and the case scalar (alpha for II, lambda for IV, 1 otherwise).
struct ClassifiedFlip {
  FlipClass cls;
  SemilinearMap map;
  std::vector<Vec> basis;
  Fq2 scalar;
};

/// Biorthogonal complement: perp under beta intersected with perp under
/// beta_phi.
Subspace biorthogonal_perp(const Field& F, const SesquiForm& beta, const SesquiForm& bphi,
                           const Subspace& U);

/// The canonical flip of each class: alpha = omega for II, lambda = the
/// smallest non-square of F_{q^2} for IV.
SemilinearMap canonical_flip(const HermitianSpace& space, FlipClass cls);

/// Scalar-rescale f to an involution inducing the same projective map.
/// Linear maps come out as isometries or anti-isometries, sigma-semilinear
/// ones as isometries.  Throws NotAFlip on any algebraic obstruction.
SemilinearMap normalize_flip(const HermitianSpace& space, const SemilinearMap& f);

/// Pairwise biorthogonal beta-isotropic points with beta_phi(u,u) != 0,
/// found greedily in canonical vector order (each next point inside the
/// biorthogonal complement of the previous ones).  Empty when the search
/// dies, which happens exactly when f is not a flip.
std::optional<std::vector<Vec>> witness_points(const HermitianSpace& space,
                                               const SemilinearMap& normalized);

/// The flag spanned by the witness points; every member is
/// beta_phi-nondegenerate.  Throws NotAFlip.
Chamber witness_chamber(const HermitianSpace& space, const SemilinearMap& normalized);

/// A map induces a flip iff it is a similitude, a projective involution, and
/// sends some chamber to an opposite (decided by the constructive witness
/// search; the second flip axiom is implied because the longest word of the
/// type-C Weyl group is central).
bool is_flip(const HermitianSpace& space, const SemilinearMap& f);

/// Decide the Main-Theorem case of a flip and produce the witness basis.
/// The postconditions are re-verified by direct evaluation before returning.
/// Throws NotAFlip.
ClassifiedFlip classify(const HermitianSpace& space, const SemilinearMap& f);

}  // namespace uniflip
