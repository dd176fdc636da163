#include "uniflip/stabilizer.hpp"

namespace uniflip {

const char* group_family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::UxU: return "UxU";
    case GroupFamily::GL: return "GL";
    case GroupFamily::OPlus: return "OPlus";
    case GroupFamily::OMinus: return "OMinus";
  }
  return "?";
}

uint64_t gu_order(int n, int64_t q) {
  // q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - (-1)^i)
  uint64_t order = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) order *= static_cast<uint64_t>(q);
  uint64_t qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= static_cast<uint64_t>(q);
    order *= (i % 2 == 1) ? qi + 1 : qi - 1;
  }
  return order;
}

uint64_t gl_order(int n, int64_t q) {
  uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<uint64_t>(q);
  uint64_t order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= static_cast<uint64_t>(q);
  }
  return order;
}

uint64_t orthogonal_order(int m, int64_t q, int epsilon) {
  // |O_{2m}^eps(q)| = 2 q^{m(m-1)} (q^m - eps) prod_{i=1}^{m-1} (q^{2i} - 1)
  uint64_t order = 2;
  for (int i = 0; i < m * (m - 1); ++i) order *= static_cast<uint64_t>(q);
  uint64_t qm = 1;
  for (int i = 0; i < m; ++i) qm *= static_cast<uint64_t>(q);
  order *= epsilon == 1 ? qm - 1 : qm + 1;
  uint64_t q2i = 1;
  for (int i = 1; i < m; ++i) {
    q2i = 1;
    for (int j = 0; j < 2 * i; ++j) q2i *= static_cast<uint64_t>(q);
    order *= q2i - 1;
  }
  return order;
}

namespace {

bool preserves_form(const Field& F, const SesquiForm& form, const Matrix& g) {
  Matrix gt = transpose(g);
  if (form.twist == Twist::Frobenius) gt = conj_entries(F, gt);
  return mat_mul(F, mat_mul(F, g, form.gram), gt) == form.gram;
}

bool commutes_with_flip(const Field& F, const SemilinearMap& flip, const Matrix& g) {
  // g linear: g∘f has matrix M_f * M_g, f∘g has matrix tau_f(M_g) * M_f.
  Matrix lhs = mat_mul(F, flip.mat, g);
  Matrix mg = flip.tau == Tau::Frobenius ? conj_entries(F, g) : g;
  Matrix rhs = mat_mul(F, mg, flip.mat);
  return lhs == rhs;
}

}  // namespace

bool in_stabilizer(const HermitianSpace& space, const ClassifiedFlip& flip, const Matrix& g) {
  const Field& F = space.field();
  if (g.rows() != space.dim() || g.cols() != space.dim())
    fail(Errc::DimensionMismatch, "stabilizer candidates act on V");
  if (F.is_zero(det(F, g))) fail(Errc::SingularMatrix, "stabilizer candidates must be invertible");
  bool beta_ok = preserves_form(F, space.beta_form(), g);
  if (!beta_ok) return false;
  bool bphi_ok = preserves_form(F, beta_phi(space, flip.map), g);
  bool centralizes = commutes_with_flip(F, flip.map, g);
  if (bphi_ok != centralizes)
    throw std::logic_error("form-preserving and centralizing characterizations disagree");
  return bphi_ok;
}

namespace {

std::optional<Vec> first_point_of_kind(const HermitianSpace& space, const SesquiForm& bphi,
                                       const Subspace& U, int kind) {
  const Field& F = space.field();
  SesquiForm beta = space.beta_form();
  uint64_t total = vector_count(F, U);
  for (uint64_t t = 1; t < total; ++t) {
    Vec v = vector_at(F, U, t);
    if (!F.is_zero(eval_form(F, beta, v, v))) continue;
    Fq2 c = eval_form(F, bphi, v, v);
    if (F.is_zero(c)) continue;
    if (kind != 0 && (F.is_square(c) ? 1 : -1) != kind) continue;
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Vec> adapted_basis(const HermitianSpace& space, const ClassifiedFlip& flip,
                               const std::vector<Subspace>& chamber) {
  const Field& F = space.field();
  int n = space.n();
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, flip.map);
  bool semilinear = is_semilinear_class(flip.cls);

  if (chamber.size() != static_cast<std::size_t>(n))
    fail(Errc::NotAChamber, "a chamber has one member per type");
  for (int i = 0; i < n; ++i) {
    const Subspace& Ci = chamber[i];
    if (Ci.ambient() != space.dim() || Ci.dim() != static_cast<std::size_t>(i + 1))
      fail(Errc::NotAChamber, "member dimensions must be 1..n");
    if (i > 0 && !Ci.contains(F, chamber[i - 1])) fail(Errc::NotAChamber, "members must be nested");
    if (!is_totally_isotropic(space, Ci)) fail(Errc::NotAChamber, "members must be totally isotropic");
    if (!is_nondegenerate_on(F, bphi, Ci))
      fail(Errc::NotAChamber, "members must be beta_phi-nondegenerate");
  }
  if (semilinear && n > 1) {
    int plus = 0, minus = 0;
    for (int i = 0; i + 1 < n; ++i)
      (disc_sign(F, bphi, chamber[i]) == 1 ? plus : minus)++;
    if (minus == n - 1)
      fail(Errc::WrongVariant, "chamber lies in the minus geometry; the plus geometry is required");
    if (minus != 0) fail(Errc::NotAChamber, "member discriminants are mixed");
  }

  Fq2 lambda = flip.scalar;  // alpha for II, lambda for IV, 1 otherwise
  std::vector<Vec> es, fs;
  for (int i = 0; i < n; ++i) {
    Subspace Wi = i == 0 ? chamber[0]
                         : intersect(F, biorthogonal_perp(F, beta, bphi, chamber[i - 1]), chamber[i]);
    bool last = i + 1 == n;
    Vec u;
    Fq2 c;
    if (!semilinear) {
      auto u0 = first_point_of_kind(space, bphi, Wi, 0);
      if (!u0) fail(Errc::NotAChamber, "chamber member has no geometry point");
      u = *u0;
      c = eval_form(F, bphi, u, u);
      if (flip.cls == FlipClass::I_LinearIsometry) {
        Fq2 gamma = F.solve_norm(F.fq_inv(c.a0));
        es.push_back(vec_scale(F, gamma, u));
        fs.push_back(apply(F, flip.map, es.back()));
      } else {
        Fq2 t = F.neg(F.mul(lambda, F.inv(c)));
        Fq2 gamma = F.solve_norm(t.a0);
        es.push_back(vec_scale(F, gamma, u));
        fs.push_back(vec_scale(F, F.inv(lambda), apply(F, flip.map, es.back())));
      }
    } else if (!last || flip.cls == FlipClass::III_SemilinearSquare) {
      auto u0 = first_point_of_kind(space, bphi, Wi, 1);
      if (!u0) fail(Errc::NotAChamber, "no square-type point in the chamber member");
      u = *u0;
      c = eval_form(F, bphi, u, u);
      Fq2 gamma = F.sqrt(F.inv(c));
      es.push_back(vec_scale(F, gamma, u));
      fs.push_back(apply(F, flip.map, es.back()));
    } else {
      auto u0 = first_point_of_kind(space, bphi, Wi, -1);
      if (!u0) fail(Errc::NotAChamber, "no non-square-type point in the last member");
      u = *u0;
      c = eval_form(F, bphi, u, u);
      Fq2 gamma = F.sqrt(F.mul(F.frobenius(lambda), F.inv(c)));
      es.push_back(vec_scale(F, gamma, u));
      fs.push_back(vec_scale(F, F.inv(lambda), apply(F, flip.map, es.back())));
    }
  }
  std::vector<Vec> basis = es;
  basis.insert(basis.end(), fs.begin(), fs.end());
  return basis;
}

Matrix transporter(const HermitianSpace& space, const ClassifiedFlip& flip,
                   const std::vector<Subspace>& C, const std::vector<Subspace>& D) {
  const Field& F = space.field();
  Matrix AC = Matrix::from_rows(adapted_basis(space, flip, C));
  Matrix AD = Matrix::from_rows(adapted_basis(space, flip, D));
  return mat_mul(F, inverse(F, AC), AD);
}

std::vector<Vec> gram_equalizing_basis(const HermitianSpace& space, const ClassifiedFlip& flip) {
  const Field& F = space.field();
  if (!is_semilinear_class(flip.cls))
    fail(Errc::WrongClass, "the gram-equalizing construction needs a semilinear flip");
  int n = space.n();
  Fq2 alpha = F.omega();  // alpha^2 = r, the canonical non-square of F_q
  std::vector<Vec> h(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec& e = flip.basis[i];
    const Vec& fv = flip.basis[n + i];
    Fq2 li = (i + 1 == n) ? flip.scalar : F.one();
    Vec lf = vec_scale(F, li, fv);
    h[2 * i] = vec_add(F, e, lf);
    h[2 * i + 1] = vec_scale(F, alpha, vec_sub(F, e, lf));
  }
  return h;
}

GroupDescriptor predicted_group(const HermitianSpace& space, const ClassifiedFlip& flip) {
  const Field& F = space.field();
  int n = space.n();
  int64_t q = F.q();
  switch (flip.cls) {
    case FlipClass::I_LinearIsometry: {
      uint64_t gu = gu_order(n, q);
      return {GroupFamily::UxU, n, q, gu * gu};
    }
    case FlipClass::II_LinearAntiIsometry:
      return {GroupFamily::GL, n, q, gl_order(n, q * q)};
    default: {
      bool minus_one_square = q % 4 == 1;
      bool plus_branch = n % 2 == 0 || !minus_one_square;
      bool square_type = flip.cls == FlipClass::III_SemilinearSquare;
      // Square type: plus in the plus_branch, minus otherwise; non-square
      // type swaps the two.
      int eps = (plus_branch == square_type) ? 1 : -1;
      return {eps == 1 ? GroupFamily::OPlus : GroupFamily::OMinus, n, q,
              orthogonal_order(n, q, eps)};
    }
  }
}

uint64_t enumerate_stabilizer_order(const HermitianSpace& space, const ClassifiedFlip& flip) {
  const Field& F = space.field();
  if (space.n() != 1) fail(Errc::TooLarge, "exhaustive stabilizer enumeration is n = 1 only");
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, flip.map);
  uint64_t Q = F.order();
  uint64_t count = 0;
  Matrix g(2, 2);
  for (uint64_t a = 0; a < Q; ++a)
    for (uint64_t b = 0; b < Q; ++b)
      for (uint64_t c = 0; c < Q; ++c)
        for (uint64_t d = 0; d < Q; ++d) {
          g.at(0, 0) = F.element_at(a);
          g.at(0, 1) = F.element_at(b);
          g.at(1, 0) = F.element_at(c);
          g.at(1, 1) = F.element_at(d);
          Fq2 dt = F.sub(F.mul(g.at(0, 0), g.at(1, 1)), F.mul(g.at(0, 1), g.at(1, 0)));
          if (F.is_zero(dt)) continue;
          if (!preserves_form(F, beta, g)) continue;
          bool bphi_ok = preserves_form(F, bphi, g);
          if (bphi_ok != commutes_with_flip(F, flip.map, g))
            throw std::logic_error("characterizations disagree during enumeration");
          if (bphi_ok) ++count;
        }
  return count;
}

}  // namespace uniflip
