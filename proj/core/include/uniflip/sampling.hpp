#pragma once

#include <random>

#include "uniflip/hermitian.hpp"

namespace uniflip {

/// Seeded deterministic sampling for the randomized property checks.  All
/// draws go through the engine in a fixed call order, so a seed pins every
/// sampled object.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : gen_(seed) {}

  uint64_t next(uint64_t bound) { return bound == 0 ? 0 : gen_() % bound; }

  Fq2 element(const Field& F) { return F.element_at(next(F.order())); }
  Fq2 nonzero(const Field& F) { return F.element_at(1 + next(F.order() - 1)); }

  Vec vector(const Field& F, std::size_t dim);
  Vec nonzero_vector(const Field& F, std::size_t dim);
  Matrix matrix(const Field& F, std::size_t rows, std::size_t cols);
  Matrix invertible_matrix(const Field& F, std::size_t n);
  Subspace subspace(const Field& F, std::size_t ambient, std::size_t dim);

  /// Random hyperbolic basis e_1..e_n, f_1..f_n (standard Gram matrix).
  std::vector<Vec> hyperbolic_basis(const HermitianSpace& space);
  /// Random element of the unitary group of the space.
  Matrix unitary(const HermitianSpace& space);

 private:
  std::mt19937_64 gen_;
};

}  // namespace uniflip
