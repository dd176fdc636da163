#pragma once

#include "uniflip/geometry.hpp"

namespace uniflip {

enum class GroupFamily { UxU, GL, OPlus, OMinus };

const char* group_family_name(GroupFamily f);

struct GroupDescriptor {
  GroupFamily family;
  int n;
  int64_t q;
  uint64_t order;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

uint64_t gu_order(int n, int64_t q);
uint64_t gl_order(int n, int64_t q);  // GL_n over a field with q elements
uint64_t orthogonal_order(int m, int64_t q, int epsilon);  // |O_{2m}^eps(q)|

/// g lies in the stabilizer iff it preserves beta and beta_phi; preserving
/// beta_phi is equivalent to commuting with the flip, and both
/// characterizations are evaluated and must agree.
bool in_stabilizer(const HermitianSpace& space, const ClassifiedFlip& flip, const Matrix& g);

/// Hyperbolic basis adapted to a chamber C of the flip's geometry (the full
/// geometry for linear flips, the plus geometry for semilinear ones):
/// standard Gram, the class's flip relations with the canonical scalar, and
/// C_i = <e_1..e_i>.  Throws NotAChamber / WrongVariant.
std::vector<Vec> adapted_basis(const HermitianSpace& space, const ClassifiedFlip& flip,
                               const std::vector<Subspace>& chamber);

/// Element of the stabilizer carrying chamber C onto chamber D.
Matrix transporter(const HermitianSpace& space, const ClassifiedFlip& flip,
                   const std::vector<Subspace>& C, const std::vector<Subspace>& D);

/// The flip-fixed basis h_1..h_2n on which the Gram matrices of beta and
/// beta_phi coincide, block diagonal with 2x2 blocks.  Classes III/IV only.
std::vector<Vec> gram_equalizing_basis(const HermitianSpace& space, const ClassifiedFlip& flip);

/// Isomorphism type of the stabilizer with its closed-form order.
GroupDescriptor predicted_group(const HermitianSpace& space, const ClassifiedFlip& flip);

/// Exact brute-force order of the stabilizer at n = 1 (all invertible 2x2
/// matrices over F_{q^2} are filtered).  Throws TooLarge for n > 1.
uint64_t enumerate_stabilizer_order(const HermitianSpace& space, const ClassifiedFlip& flip);

}  // namespace uniflip
