#pragma once

#include "uniflip/classify.hpp"

namespace uniflip {

/// Object of the induced geometry: a beta-isotropic, beta_phi-nondegenerate
/// subspace.  disc is the square class of its beta_phi Gram determinant for
/// sigma-semilinear flips (+1/-1) and 0 (not applicable) for linear ones.
struct GeometryObject {
  Subspace sub;
  int disc = 0;

  friend bool operator==(const GeometryObject&, const GeometryObject&) = default;
};

enum class Variant { Full, Plus, Minus };

const char* variant_name(Variant v);

struct Geometry {
  ClassifiedFlip flip;
  Variant variant = Variant::Full;
  Subspace ambient;  // the whole space, or a biorthogonal complement for residues
  int rank = 0;
  std::vector<std::vector<GeometryObject>> by_dim;  // by_dim[d-1] sorted by subspace

  const std::vector<GeometryObject>& objects(int d) const { return by_dim[d - 1]; }
};

bool is_semilinear_class(FlipClass cls);

/// Square class of det of the beta_phi Gram matrix of U: +1 square, -1
/// non-square.  Throws WrongClass for linear flips, DegenerateSubspace when
/// beta_phi degenerates on U.
int disc(const HermitianSpace& space, const ClassifiedFlip& flip, const Subspace& U);
/// Same, given the induced form directly (no class check).
int disc_sign(const Field& F, const SesquiForm& bphi, const Subspace& U);

Geometry build_geometry(const HermitianSpace& space, const ClassifiedFlip& flip, Variant variant,
                        const EnumerationGuard& guard = {});
/// Geometry of the restricted flip on an even-dimensional nondegenerate
/// biorthogonally-closed subspace W.
Geometry build_geometry_on(const HermitianSpace& space, const ClassifiedFlip& flip,
                           Variant variant, const Subspace& ambient,
                           const EnumerationGuard& guard = {});

/// First vector of U (canonical order) that is beta-isotropic with
/// beta_phi(u, u) != 0.  Throws NoPoint.
Vec find_point(const HermitianSpace& space, const ClassifiedFlip& flip, const Subspace& U);

/// Basis of U made of pairwise biorthogonal points, each with
/// beta_phi(w, w) != 0, found by recursing into biorthogonal complements.
std::vector<Vec> biorthogonal_basis(const HermitianSpace& space, const ClassifiedFlip& flip,
                                    const Subspace& U);

/// Grow U to an n-dimensional object by adjoining points of <U, phi(U)>^perp.
GeometryObject extend_to_maximal(const HermitianSpace& space, const ClassifiedFlip& flip,
                                 const Subspace& U);

/// Containment incidence (either direction), objects of equal type only
/// incident to themselves.
bool incident(const Field& F, const Subspace& a, const Subspace& b);

/// The residue map r_u(X) = X cap u^{biorth}.
Subspace residue_map(const HermitianSpace& space, const ClassifiedFlip& flip, const Subspace& u,
                     const Subspace& X);

/// r_u applied to every object incident to the point u; the result is the
/// geometry induced on u's biorthogonal complement.
Geometry residue(const HermitianSpace& space, const Geometry& geom, const Subspace& u);

/// Every maximal flag has one object of each type 1..rank.
bool is_transversal(const HermitianSpace& space, const Geometry& geom);

/// All maximal flags (chambers) of the geometry, each sorted by type.
std::vector<std::vector<Subspace>> geometry_chambers(const HermitianSpace& space,
                                                     const Geometry& geom);

/// Extend a biorthogonal point basis of W to one of the n-object M; the
/// doubled family {w_i, phi(w_i)} is a beta_phi orthogonal basis of V made
/// of beta pre-hyperbolic pairs.
std::vector<Vec> orthogonal_extension(const HermitianSpace& space, const ClassifiedFlip& flip,
                                      const Subspace& W, const Subspace& M);

}  // namespace uniflip
