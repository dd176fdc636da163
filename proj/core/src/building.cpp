#include "uniflip/building.hpp"

#include <algorithm>
#include <set>

namespace uniflip {

namespace {

constexpr uint64_t kCountCap = UINT64_MAX;

// Saturating helpers over unsigned __int128.
unsigned __int128 sat_mul(unsigned __int128 a, unsigned __int128 b) {
  if (a != 0 && b > (static_cast<unsigned __int128>(-1)) / a) return static_cast<unsigned __int128>(-1);
  return a * b;
}

uint64_t clamp_u64(unsigned __int128 v) {
  return v > kCountCap ? kCountCap : static_cast<uint64_t>(v);
}

// Isotropic points of the rank-m polar space: (q^{2m}-1)(q^{2m-1}+1)/(q^2-1).
unsigned __int128 polar_points(int m, int64_t q) {
  unsigned __int128 qa = 1, qb = 1;
  for (int i = 0; i < 2 * m; ++i) qa = sat_mul(qa, q);
  for (int i = 0; i < 2 * m - 1; ++i) qb = sat_mul(qb, q);
  return sat_mul(qa - 1, qb + 1) / (static_cast<unsigned __int128>(q) * q - 1);
}

unsigned __int128 isotropic_count_wide(int m, int64_t q, int k) {
  if (k == 0) return 1;
  if (k > m) return 0;
  unsigned __int128 Q = static_cast<unsigned __int128>(q) * q;
  // T(m,k) = P(m) * T(m-1,k-1) * (Q-1)/(Q^k-1), counting point-subspace flags.
  unsigned __int128 t = isotropic_count_wide(m - 1, q, k - 1);
  t = sat_mul(t, polar_points(m, q));
  t = sat_mul(t, Q - 1);
  unsigned __int128 qk = 1;
  for (int i = 0; i < k; ++i) qk = sat_mul(qk, Q);
  return t / (qk - 1);
}

}  // namespace

uint64_t isotropic_subspace_count(int m, int64_t q, int k) {
  return clamp_u64(isotropic_count_wide(m, q, k));
}

uint64_t chamber_count(int m, int64_t q) {
  unsigned __int128 c = 1;
  for (int i = 1; i <= m; ++i) c = sat_mul(c, polar_points(i, q));
  return clamp_u64(c);
}

namespace {

// Projective representatives of a d-dimensional coefficient space: first
// nonzero coordinate is 1, iterated leading position outward.
template <typename Fn>
void for_each_projective_coeff(const Field& F, std::size_t d, Fn&& fn) {
  uint64_t Q = F.order();
  std::vector<Fq2> c(d);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(c.begin(), c.end(), Fq2{});
    c[lead] = {1, 0};
    std::size_t tail = d - lead - 1;
    uint64_t total = 1;
    for (std::size_t i = 0; i < tail; ++i) total *= Q;
    for (uint64_t t = 0; t < total; ++t) {
      uint64_t rest = t;
      for (std::size_t i = 0; i < tail; ++i) {
        c[lead + 1 + i] = F.element_at(rest % Q);
        rest /= Q;
      }
      fn(c);
    }
  }
}

struct CoeffSpace {
  // Restriction data for enumerating inside a subspace W of V.
  Matrix basis;       // rows span W (identity for the whole space)
  Matrix gram;        // beta restricted to the rows
  std::size_t dim() const { return basis.rows(); }
};

Subspace to_ambient(const Field& F, const CoeffSpace& cs, const Subspace& coeff_sub) {
  Matrix rows(0, cs.basis.cols());
  for (std::size_t i = 0; i < coeff_sub.dim(); ++i)
    rows.append_row(row_times_matrix(F, coeff_sub.basis_row(i), cs.basis));
  return Subspace::span(F, rows);
}

// x * gram * sigma(x)^t without temporaries.
Fq2 isotropy_value(const Field& F, const Matrix& gram, const Vec& x) {
  Fq2 s{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (F.is_zero(x[i])) continue;
    Fq2 acc{};
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (F.is_zero(x[j])) continue;
      acc = F.add(acc, F.mul(gram.at(i, j), F.frobenius(x[j])));
    }
    s = F.add(s, F.mul(x[i], acc));
  }
  return s;
}

// Orderly generation: a k-space is emitted exactly once, from the pair
// (span of its first k-1 RREF rows, line of its last RREF row).  Candidate
// x extends W iff it is singular, lies in W^perp, vanishes on W's pivot
// columns, and its own pivot column lies beyond W's pivots with W zero
// there; [W; x/lead] is then already the canonical RREF basis.
std::vector<Subspace> enumerate_isotropic_coeff(const Field& F, const CoeffSpace& cs, int k) {
  std::size_t m = cs.dim();
  std::vector<Subspace> points;
  for_each_projective_coeff(F, m, [&](const Vec& c) {
    if (F.is_zero(isotropy_value(F, cs.gram, c))) points.push_back(Subspace::span(F, {c}, m));
  });
  std::sort(points.begin(), points.end());
  if (k == 1) return points;

  std::vector<Subspace> current = points;
  SesquiForm restricted{cs.gram, Twist::Frobenius};
  uint64_t Q = F.order();
  Vec x(m);
  // tail_space[p] = coordinate subspace vanishing on columns 0..p; a valid
  // extension row has its pivot beyond all of W's, so it lives there.
  std::vector<Subspace> tail_space;
  for (std::size_t p = 0; p < m; ++p) {
    Matrix rows(0, m);
    for (std::size_t j = p + 1; j < m; ++j) rows.append_row(unit_vector(m, j));
    tail_space.push_back(Subspace::span(F, rows));
  }
  for (int step = 2; step <= k; ++step) {
    std::vector<Subspace> next;
    for (const Subspace& W : current) {
      const Matrix& wb = W.basis();
      std::size_t rows = wb.rows();
      std::vector<std::size_t> pivots(rows);
      for (std::size_t i = 0; i < rows; ++i) {
        std::size_t p = 0;
        while (p < m && F.is_zero(wb.at(i, p))) ++p;
        pivots[i] = p;
      }
      std::size_t max_pivot = pivots.back();
      Subspace P = intersect(F, perp(F, restricted, W), tail_space[max_pivot]);
      const Matrix& pb = P.basis();
      std::size_t d = pb.rows();
      // Projective coefficient tuples over P, leading coefficient 1.
      for (std::size_t lead = 0; lead < d; ++lead) {
        uint64_t tail_total = 1;
        for (std::size_t i = lead + 1; i < d; ++i) tail_total *= Q;
        for (uint64_t t = 0; t < tail_total; ++t) {
          std::fill(x.begin(), x.end(), Fq2{});
          for (std::size_t j = 0; j < m; ++j) x[j] = pb.at(lead, j);
          uint64_t rest = t;
          for (std::size_t i = lead + 1; i < d; ++i) {
            Fq2 c = F.element_at(rest % Q);
            rest /= Q;
            if (F.is_zero(c)) continue;
            for (std::size_t j = 0; j < m; ++j) x[j] = F.add(x[j], F.mul(c, pb.at(i, j)));
          }
          bool reduced = true;
          for (std::size_t i = 0; i < rows && reduced; ++i)
            if (!F.is_zero(x[pivots[i]])) reduced = false;
          if (!reduced) continue;
          std::size_t xlead = 0;
          while (xlead < m && F.is_zero(x[xlead])) ++xlead;
          if (xlead == m || xlead <= max_pivot) continue;
          bool column_clear = true;
          for (std::size_t i = 0; i < rows && column_clear; ++i)
            if (!F.is_zero(wb.at(i, xlead))) column_clear = false;
          if (!column_clear) continue;
          if (!F.is_zero(isotropy_value(F, cs.gram, x))) continue;
          Fq2 inv_lead = F.inv(x[xlead]);
          Matrix ext = wb;
          Vec xn(m);
          for (std::size_t j = 0; j < m; ++j) xn[j] = F.mul(inv_lead, x[j]);
          ext.append_row(xn);
          Subspace U;
          U = Subspace::span(F, ext);  // already RREF; span just repackages
          next.push_back(std::move(U));
        }
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return current;
}

}  // namespace

std::vector<Subspace> enumerate_isotropic_in(const HermitianSpace& space, const Subspace& W,
                                             int k, const EnumerationGuard& guard) {
  const Field& F = space.field();
  if (k < 1 || static_cast<std::size_t>(2 * k) > W.dim() + 1)
    fail(Errc::DimensionMismatch, "isotropic dimension out of range");
  int witt = static_cast<int>(W.dim() / 2);
  uint64_t estimate = isotropic_subspace_count(witt, F.q(), k);
  if (estimate > guard.max_objects)
    fail(Errc::EnumerationTooLarge,
         "estimated " + std::to_string(estimate) + " objects exceeds guard " +
             std::to_string(guard.max_objects));
  CoeffSpace cs{W.basis(), gram_on(F, space.beta_form(), W.basis())};
  std::vector<Subspace> coeff = enumerate_isotropic_coeff(F, cs, k);
  std::vector<Subspace> out;
  out.reserve(coeff.size());
  for (const Subspace& U : coeff) out.push_back(to_ambient(F, cs, U));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_isotropic(const HermitianSpace& space, int k,
                                          const EnumerationGuard& guard) {
  return enumerate_isotropic_in(space, Subspace::full(space.dim()), k, guard);
}

std::vector<Chamber> enumerate_chambers(const HermitianSpace& space,
                                        const EnumerationGuard& guard) {
  const Field& F = space.field();
  int n = space.n();
  uint64_t estimate = chamber_count(n, F.q());
  if (estimate > guard.max_objects)
    fail(Errc::EnumerationTooLarge,
         "estimated " + std::to_string(estimate) + " chambers exceeds guard " +
             std::to_string(guard.max_objects));

  std::vector<Subspace> generators = enumerate_isotropic(space, n, guard);
  std::vector<Chamber> chambers;

  // Chambers as (generator, complete internal flag) pairs; the top member
  // determines the generator so no deduplication is needed.
  for (const Subspace& G : generators) {
    std::vector<std::vector<Subspace>> partial{{}};
    for (int d = 1; d < n; ++d) {
      std::vector<std::vector<Subspace>> extended;
      for (const auto& chain : partial) {
        const Subspace* prev = chain.empty() ? nullptr : &chain.back();
        std::set<Subspace> nexts;
        for_each_projective_coeff(F, G.dim(), [&](const Vec& c) {
          Vec x = row_times_matrix(F, c, G.basis());
          if (prev && prev->contains(F, x)) return;
          Matrix rows = prev ? prev->basis() : Matrix(0, space.dim());
          rows.append_row(x);
          nexts.insert(Subspace::span(F, rows));
        });
        for (const Subspace& s : nexts) {
          if (s.dim() != static_cast<std::size_t>(d)) continue;
          auto chain2 = chain;
          chain2.push_back(s);
          extended.push_back(std::move(chain2));
        }
      }
      partial = std::move(extended);
    }
    for (auto& chain : partial) {
      chain.push_back(G);
      chambers.push_back(Chamber{std::move(chain)});
    }
  }
  std::sort(chambers.begin(), chambers.end());
  return chambers;
}

bool is_chamber(const HermitianSpace& space, const std::vector<Subspace>& flag) {
  const Field& F = space.field();
  if (flag.size() != static_cast<std::size_t>(space.n())) return false;
  for (std::size_t i = 0; i < flag.size(); ++i) {
    if (flag[i].ambient() != space.dim()) return false;
    if (flag[i].dim() != i + 1) return false;
    if (!is_totally_isotropic(space, flag[i])) return false;
    if (i > 0 && !flag[i].contains(F, flag[i - 1])) return false;
  }
  return true;
}

bool is_opposite(const HermitianSpace& space, const Chamber& C, const Chamber& D) {
  const Field& F = space.field();
  if (C.flag.size() != D.flag.size()) fail(Errc::DimensionMismatch, "chamber ranks differ");
  for (std::size_t i = 0; i < C.flag.size(); ++i) {
    Subspace p = perp(F, space.beta_form(), C.flag[i]);
    if (intersect(F, p, D.flag[i]).dim() != 0) return false;
  }
  return true;
}

Chamber apply_to_chamber(const Field& F, const SemilinearMap& f, const Chamber& C) {
  Chamber out;
  out.flag.reserve(C.flag.size());
  for (const Subspace& U : C.flag) out.flag.push_back(apply_to_subspace(F, f, U));
  return out;
}

PolarFrame frame_from_basis(const HermitianSpace& space, const std::vector<Vec>& basis) {
  const Field& F = space.field();
  int n = space.n();
  if (basis.size() != 2 * static_cast<std::size_t>(n))
    fail(Errc::DimensionMismatch, "hyperbolic basis must have 2n vectors");
  PolarFrame frame;
  for (int i = 0; i < n; ++i)
    frame.pairs.emplace_back(Subspace::span(F, {basis[i]}, space.dim()),
                             Subspace::span(F, {basis[n + i]}, space.dim()));
  return frame;
}

std::vector<Chamber> apartment(const HermitianSpace& space, const PolarFrame& frame) {
  const Field& F = space.field();
  int n = space.n();
  if (frame.pairs.size() != static_cast<std::size_t>(n))
    fail(Errc::InvalidFrame, "frame must consist of n point pairs");
  std::vector<Vec> reps;
  for (const auto& [P, Pp] : frame.pairs) {
    if (P.dim() != 1 || Pp.dim() != 1) fail(Errc::InvalidFrame, "frame members must be points");
    reps.push_back(P.basis_row(0));
    reps.push_back(Pp.basis_row(0));
  }
  Matrix all = Matrix::from_rows(reps);
  if (rank(F, all) != space.dim()) fail(Errc::InvalidFrame, "frame points must span V");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!F.is_zero(space.beta(reps[2 * i], reps[2 * j])))
        fail(Errc::InvalidFrame, "e-side points must be pairwise orthogonal and singular");
      if (!F.is_zero(space.beta(reps[2 * i + 1], reps[2 * j + 1])))
        fail(Errc::InvalidFrame, "f-side points must be pairwise orthogonal and singular");
      if (i != j && !F.is_zero(space.beta(reps[2 * i], reps[2 * j + 1])))
        fail(Errc::InvalidFrame, "distinct pairs must be orthogonal");
    }
  for (int i = 0; i < n; ++i)
    if (F.is_zero(space.beta(reps[2 * i], reps[2 * i + 1])))
      fail(Errc::InvalidFrame, "paired points must be hyperbolic");

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Chamber> result;
  do {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Chamber C;
      Matrix rows(0, space.dim());
      for (int k = 0; k < n; ++k) {
        int pair_idx = perm[k];
        bool f_side = (mask >> pair_idx) & 1;
        rows.append_row(reps[2 * pair_idx + (f_side ? 1 : 0)]);
        C.flag.push_back(Subspace::span(F, rows));
      }
      result.push_back(std::move(C));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(result.begin(), result.end());
  return result;
}

DeltaPhiSets delta_phi_sets(const HermitianSpace& space, const SemilinearMap& f,
                            const EnumerationGuard& guard) {
  const Field& F = space.field();
  SesquiForm bphi = beta_phi(space, f);
  DeltaPhiSets sets;
  for (const Chamber& C : enumerate_chambers(space, guard)) {
    if (is_opposite(space, C, apply_to_chamber(F, f, C))) sets.by_opposition.push_back(C);
    bool nondeg = true;
    for (const Subspace& Ci : C.flag)
      if (!is_nondegenerate_on(F, bphi, Ci)) {
        nondeg = false;
        break;
      }
    if (nondeg) sets.by_nondegeneracy.push_back(C);
  }
  return sets;
}

std::vector<Chamber> delta_phi(const HermitianSpace& space, const SemilinearMap& f,
                               const EnumerationGuard& guard) {
  DeltaPhiSets sets = delta_phi_sets(space, f, guard);
  if (sets.by_opposition != sets.by_nondegeneracy)
    throw std::logic_error("flipped-chamber characterizations disagree");
  return std::move(sets.by_opposition);
}

}  // namespace uniflip
