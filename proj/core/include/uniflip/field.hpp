#pragma once

#include <cstdint>
#include <compare>
#include <vector>

#include "uniflip/errors.hpp"

namespace uniflip {

/// Element of F_{q^2} = F_q[w], w^2 = r, stored as a0 + a1*w with both
/// components reduced mod q.  Plain data; all arithmetic goes through Field.
struct Fq2 {
  int32_t a0 = 0;
  int32_t a1 = 0;

  friend bool operator==(const Fq2&, const Fq2&) = default;

  // Canonical order: by integer value a0 + a1*q (a1 major).  Every
  // "smallest element such that ..." choice in the library uses this order.
  friend std::strong_ordering operator<=>(const Fq2& x, const Fq2& y) {
    if (auto c = x.a1 <=> y.a1; c != 0) return c;
    return x.a0 <=> y.a0;
  }
};

/// Exact arithmetic in F_q (q an odd prime) and F_{q^2}, with the involution
/// sigma (q-th power map), norm, trace and quadratic-residue machinery.
///
/// The modulus is canonical: r is the smallest quadratic non-residue of F_q,
/// so all derived choices (square roots, norm solutions, the smallest
/// non-square of F_{q^2}) are byte-reproducible across runs.
class Field {
 public:
  /// Throws NotOddPrime unless q is an odd prime >= 3; TooLarge beyond 2^15.
  explicit Field(int64_t q);

  int64_t q() const { return q_; }
  int64_t r() const { return r_; }
  uint64_t order() const { return static_cast<uint64_t>(q_) * q_; }

  friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }

  // ---- element builders ----
  Fq2 zero() const { return {0, 0}; }
  Fq2 one() const { return {1, 0}; }
  Fq2 omega() const { return {0, 1}; }
  Fq2 make(int64_t a0, int64_t a1) const;
  Fq2 from_base(int64_t a) const { return make(a, 0); }

  // ---- F_q arithmetic on residues in [0, q) ----
  int64_t fq_reduce(int64_t a) const;
  int64_t fq_add(int64_t a, int64_t b) const { return (a + b) % q_; }
  int64_t fq_sub(int64_t a, int64_t b) const { return fq_reduce(a - b); }
  int64_t fq_mul(int64_t a, int64_t b) const { return (a * b) % q_; }
  int64_t fq_neg(int64_t a) const { return a == 0 ? 0 : q_ - a; }
  int64_t fq_pow(int64_t a, uint64_t e) const;
  int64_t fq_inv(int64_t a) const;
  bool fq_is_square(int64_t a) const;  // 0 counts as a square
  /// Square root mod q via Tonelli-Shanks; returns the smaller of the two
  /// roots.  Throws NotASquare.
  int64_t fq_sqrt(int64_t a) const;

  // ---- F_{q^2} arithmetic ----
  Fq2 add(Fq2 a, Fq2 b) const;
  Fq2 sub(Fq2 a, Fq2 b) const;
  Fq2 neg(Fq2 a) const;
  Fq2 mul(Fq2 a, Fq2 b) const;
  Fq2 mul(int64_t c, Fq2 a) const;
  Fq2 inv(Fq2 a) const;  // DivisionByZero on 0
  Fq2 pow(Fq2 a, uint64_t e) const;

  bool is_zero(Fq2 a) const { return a.a0 == 0 && a.a1 == 0; }
  bool is_one(Fq2 a) const { return a.a0 == 1 && a.a1 == 0; }
  bool in_base(Fq2 a) const { return a.a1 == 0; }

  /// sigma(a) = a^q = a0 - a1*w (w^q = -w because r is a non-residue).
  Fq2 frobenius(Fq2 a) const { return {a.a0, static_cast<int32_t>(fq_neg(a.a1))}; }
  /// N(a) = a*sigma(a) = a0^2 - r*a1^2, an element of F_q.
  int64_t norm(Fq2 a) const;
  /// Tr(a) = a + sigma(a) = 2*a0, an element of F_q.
  int64_t trace(Fq2 a) const { return fq_mul(2, a.a0); }

  /// Euler test in F_{q^2}: a^{(q^2-1)/2} == 1.  Throws ZeroHasNoType on 0.
  bool is_square(Fq2 a) const;
  /// Smallest square root in the canonical element order.  Throws NotASquare.
  Fq2 sqrt(Fq2 a) const;
  /// Smallest x with N(x) = c, c a nonzero residue of F_q.  The norm map is
  /// surjective, so this always succeeds.
  Fq2 solve_norm(int64_t c) const;
  Fq2 trace_zero_unit() const { return omega(); }
  Fq2 smallest_nonsquare() const { return smallest_nonsquare_; }

  // ---- canonical element enumeration ----
  uint64_t index_of(Fq2 a) const { return static_cast<uint64_t>(a.a1) * q_ + a.a0; }
  Fq2 element_at(uint64_t idx) const {
    return {static_cast<int32_t>(idx % q_), static_cast<int32_t>(idx / q_)};
  }

 private:
  int64_t q_;
  int64_t r_;
  Fq2 smallest_nonsquare_;
};

}  // namespace uniflip
