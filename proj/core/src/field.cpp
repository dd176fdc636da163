#include "uniflip/field.hpp"

namespace uniflip {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroHasNoType: return "ZeroHasNoType";
    case Errc::NotASquare: return "NotASquare";
    case Errc::NoSolution: return "NoSolution";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotSimilitude: return "NotSimilitude";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NotAFlip: return "NotAFlip";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::VariantRequiresSemilinear: return "VariantRequiresSemilinear";
    case Errc::DegenerateSubspace: return "DegenerateSubspace";
    case Errc::NoPoint: return "NoPoint";
    case Errc::NotContained: return "NotContained";
    case Errc::NotAChamber: return "NotAChamber";
    case Errc::WrongVariant: return "WrongVariant";
    case Errc::WrongClass: return "WrongClass";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidFrame: return "InvalidFrame";
    case Errc::NotAPoint: return "NotAPoint";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(int64_t q) : q_(q), r_(0) {
  if (q > 32749) fail(Errc::TooLarge, "q exceeds the supported bound 2^15");
  if (q < 3 || q % 2 == 0 || !is_prime(q))
    fail(Errc::NotOddPrime, "q must be an odd prime >= 3, got " + std::to_string(q));
  // Smallest non-residue of F_q: 1 is always a square, so start at 2.
  for (int64_t c = 2; c < q_; ++c) {
    if (!fq_is_square(c)) {
      r_ = c;
      break;
    }
  }
  for (uint64_t idx = 1; idx < order(); ++idx) {
    Fq2 a = element_at(idx);
    if (!is_square(a)) {
      smallest_nonsquare_ = a;
      break;
    }
  }
}

Fq2 Field::make(int64_t a0, int64_t a1) const {
  return {static_cast<int32_t>(fq_reduce(a0)), static_cast<int32_t>(fq_reduce(a1))};
}

int64_t Field::fq_reduce(int64_t a) const {
  a %= q_;
  return a < 0 ? a + q_ : a;
}

int64_t Field::fq_pow(int64_t a, uint64_t e) const {
  int64_t acc = 1;
  a = fq_reduce(a);
  while (e) {
    if (e & 1) acc = acc * a % q_;
    a = a * a % q_;
    e >>= 1;
  }
  return acc;
}

int64_t Field::fq_inv(int64_t a) const {
  a = fq_reduce(a);
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in F_q");
  return fq_pow(a, static_cast<uint64_t>(q_) - 2);
}

bool Field::fq_is_square(int64_t a) const {
  a = fq_reduce(a);
  if (a == 0) return true;
  return fq_pow(a, static_cast<uint64_t>(q_ - 1) / 2) == 1;
}

int64_t Field::fq_sqrt(int64_t a) const {
  a = fq_reduce(a);
  if (a == 0) return 0;
  if (!fq_is_square(a)) fail(Errc::NotASquare, "no square root in F_q");
  int64_t x;
  if (q_ % 4 == 3) {
    x = fq_pow(a, static_cast<uint64_t>(q_ + 1) / 4);
  } else {
    // Tonelli-Shanks; r_ is a non-residue by construction.
    int64_t s = 0, t = q_ - 1;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    int64_t z = fq_pow(r_, static_cast<uint64_t>(t));
    int64_t m = s;
    int64_t c = z;
    int64_t u = fq_pow(a, static_cast<uint64_t>(t));
    x = fq_pow(a, static_cast<uint64_t>(t + 1) / 2);
    while (u != 1) {
      int64_t i = 0;
      int64_t probe = u;
      while (probe != 1) {
        probe = probe * probe % q_;
        ++i;
      }
      int64_t b = c;
      for (int64_t j = 0; j < m - i - 1; ++j) b = b * b % q_;
      m = i;
      c = b * b % q_;
      u = u * c % q_;
      x = x * b % q_;
    }
  }
  return std::min(x, q_ - x);
}

Fq2 Field::add(Fq2 a, Fq2 b) const { return make(a.a0 + b.a0, a.a1 + b.a1); }

Fq2 Field::sub(Fq2 a, Fq2 b) const {
  return make(static_cast<int64_t>(a.a0) - b.a0, static_cast<int64_t>(a.a1) - b.a1);
}

Fq2 Field::neg(Fq2 a) const { return {static_cast<int32_t>(fq_neg(a.a0)), static_cast<int32_t>(fq_neg(a.a1))}; }

Fq2 Field::mul(Fq2 a, Fq2 b) const {
  // (a0 + a1 w)(b0 + b1 w) = a0 b0 + r a1 b1 + (a0 b1 + a1 b0) w
  int64_t c0 = (static_cast<int64_t>(a.a0) * b.a0 + r_ * a.a1 % q_ * b.a1) % q_;
  int64_t c1 = (static_cast<int64_t>(a.a0) * b.a1 + static_cast<int64_t>(a.a1) * b.a0) % q_;
  return {static_cast<int32_t>(c0), static_cast<int32_t>(c1)};
}

Fq2 Field::mul(int64_t c, Fq2 a) const {
  c = fq_reduce(c);
  return {static_cast<int32_t>(c * a.a0 % q_), static_cast<int32_t>(c * a.a1 % q_)};
}

int64_t Field::norm(Fq2 a) const {
  return fq_reduce(static_cast<int64_t>(a.a0) * a.a0 % q_ - r_ * a.a1 % q_ * a.a1 % q_);
}

Fq2 Field::inv(Fq2 a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of 0 in F_{q^2}");
  return mul(fq_inv(norm(a)), frobenius(a));
}

Fq2 Field::pow(Fq2 a, uint64_t e) const {
  Fq2 acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool Field::is_square(Fq2 a) const {
  if (is_zero(a)) fail(Errc::ZeroHasNoType, "0 is neither square nor non-square");
  return is_one(pow(a, (order() - 1) / 2));
}

Fq2 Field::sqrt(Fq2 a) const {
  if (is_zero(a)) return a;
  if (!is_square(a)) fail(Errc::NotASquare, "no square root in F_{q^2}");
  // Tonelli-Shanks in the cyclic group of order q^2 - 1.
  uint64_t s = 0, t = order() - 1;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Fq2 c = pow(smallest_nonsquare_, t);
  uint64_t m = s;
  Fq2 u = pow(a, t);
  Fq2 x = pow(a, (t + 1) / 2);
  while (!is_one(u)) {
    uint64_t i = 0;
    Fq2 probe = u;
    while (!is_one(probe)) {
      probe = mul(probe, probe);
      ++i;
    }
    Fq2 b = c;
    for (uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    u = mul(u, c);
    x = mul(x, b);
  }
  Fq2 y = neg(x);
  return x < y ? x : y;
}

Fq2 Field::solve_norm(int64_t c) const {
  c = fq_reduce(c);
  if (c == 0) fail(Errc::DivisionByZero, "solve_norm requires a nonzero target");
  // N(a0 + a1 w) = a0^2 - r a1^2 = c.  Scan a1 ascending (the canonical
  // order is a1-major) and take the smallest a0 root for each a1.
  for (int64_t a1 = 0; a1 < q_; ++a1) {
    int64_t rhs = fq_reduce(c + r_ * a1 % q_ * a1);
    if (!fq_is_square(rhs)) continue;
    return make(fq_sqrt(rhs), a1);
  }
  fail(Errc::NoSolution, "norm is surjective; unreachable");
}

}  // namespace uniflip
