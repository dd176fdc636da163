#pragma once

#include <vector>

#include "uniflip/semilinear.hpp"

namespace uniflip {

/// Maximal flag C_1 < ... < C_n of totally isotropic subspaces.
struct Chamber {
  std::vector<Subspace> flag;

  friend bool operator==(const Chamber&, const Chamber&) = default;
  friend std::strong_ordering operator<=>(const Chamber& x, const Chamber& y) {
    if (auto c = x.flag.size() <=> y.flag.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.flag.size(); ++i)
      if (auto c = x.flag[i] <=> y.flag[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
};

struct EnumerationGuard {
  uint64_t max_objects = 10'000'000;
};

/// Closed-form count of totally isotropic k-subspaces of a rank-m space
/// (capped at a huge value on overflow).
uint64_t isotropic_subspace_count(int m, int64_t q, int k);
uint64_t chamber_count(int m, int64_t q);

/// All totally isotropic k-subspaces, sorted and RREF-canonical.  Throws
/// EnumerationTooLarge when the closed-form estimate exceeds the guard.
std::vector<Subspace> enumerate_isotropic(const HermitianSpace& space, int k,
                                          const EnumerationGuard& guard = {});

/// Same, restricted to subspaces of W (W with non-degenerate restricted beta).
std::vector<Subspace> enumerate_isotropic_in(const HermitianSpace& space, const Subspace& W,
                                             int k, const EnumerationGuard& guard = {});

std::vector<Chamber> enumerate_chambers(const HermitianSpace& space,
                                        const EnumerationGuard& guard = {});
bool is_chamber(const HermitianSpace& space, const std::vector<Subspace>& flag);

/// Opposition: C_i^perp meets D_i trivially for every i.
bool is_opposite(const HermitianSpace& space, const Chamber& C, const Chamber& D);

Chamber apply_to_chamber(const Field& F, const SemilinearMap& f, const Chamber& C);

/// 2n pairwise-pairing singular points; pair i spans a hyperbolic line
/// orthogonal to the others.
struct PolarFrame {
  std::vector<std::pair<Subspace, Subspace>> pairs;
};

PolarFrame frame_from_basis(const HermitianSpace& space, const std::vector<Vec>& basis);
/// All 2^n * n! chambers spanned by frame points.  Throws InvalidFrame.
std::vector<Chamber> apartment(const HermitianSpace& space, const PolarFrame& frame);

struct DeltaPhiSets {
  std::vector<Chamber> by_opposition;      // {C : C opposite f(C)}
  std::vector<Chamber> by_nondegeneracy;   // {C : every C_i beta_phi-nondegenerate}
};

/// Both characterizations of the flipped-chamber set, computed independently.
DeltaPhiSets delta_phi_sets(const HermitianSpace& space, const SemilinearMap& f,
                            const EnumerationGuard& guard = {});

/// The flipped-chamber set; throws logic_error if the two characterizations
/// ever disagree (they are provably equal for involutions).
std::vector<Chamber> delta_phi(const HermitianSpace& space, const SemilinearMap& f,
                               const EnumerationGuard& guard = {});

}  // namespace uniflip
