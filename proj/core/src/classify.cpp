#include "uniflip/classify.hpp"

namespace uniflip {

const char* flip_class_name(FlipClass c) {
  switch (c) {
    case FlipClass::I_LinearIsometry: return "I";
    case FlipClass::II_LinearAntiIsometry: return "II";
    case FlipClass::III_SemilinearSquare: return "III";
    case FlipClass::IV_SemilinearNonSquare: return "IV";
  }
  return "?";
}

std::optional<FlipClass> parse_flip_class(const std::string& s) {
  if (s == "I") return FlipClass::I_LinearIsometry;
  if (s == "II") return FlipClass::II_LinearAntiIsometry;
  if (s == "III") return FlipClass::III_SemilinearSquare;
  if (s == "IV") return FlipClass::IV_SemilinearNonSquare;
  return std::nullopt;
}

Subspace biorthogonal_perp(const Field& F, const SesquiForm& beta, const SesquiForm& bphi,
                           const Subspace& U) {
  return intersect(F, perp(F, beta, U), perp(F, bphi, U));
}

SemilinearMap canonical_flip(const HermitianSpace& space, FlipClass cls) {
  const Field& F = space.field();
  int n = space.n();
  Matrix M(space.dim(), space.dim());
  Fq2 alpha = F.omega();
  Fq2 lambda = F.smallest_nonsquare();
  switch (cls) {
    case FlipClass::I_LinearIsometry:
    case FlipClass::III_SemilinearSquare:
      for (int i = 0; i < n; ++i) {
        M.at(i, n + i) = F.one();
        M.at(n + i, i) = F.one();
      }
      break;
    case FlipClass::II_LinearAntiIsometry:
      for (int i = 0; i < n; ++i) {
        M.at(i, n + i) = alpha;
        M.at(n + i, i) = F.inv(alpha);
      }
      break;
    case FlipClass::IV_SemilinearNonSquare:
      for (int i = 0; i + 1 < n; ++i) {
        M.at(i, n + i) = F.one();
        M.at(n + i, i) = F.one();
      }
      M.at(n - 1, 2 * n - 1) = lambda;
      M.at(2 * n - 1, n - 1) = F.frobenius(F.inv(lambda));
      break;
  }
  Tau tau = (cls == FlipClass::I_LinearIsometry || cls == FlipClass::II_LinearAntiIsometry)
                ? Tau::Identity
                : Tau::Frobenius;
  return make_semilinear(F, std::move(M), tau);
}

SemilinearMap normalize_flip(const HermitianSpace& space, const SemilinearMap& f) {
  const Field& F = space.field();
  int64_t a;
  try {
    a = similitude_factor(space, f);
  } catch (const Error&) {
    fail(Errc::NotAFlip, "map is not a similitude");
  }
  auto lambda0 = projective_involution_scalar(F, f);
  if (!lambda0) fail(Errc::NotAFlip, "map is not a projective involution");

  if (f.tau == Tau::Identity) {
    // Make an isometry, then rescale to an involution; the rescaling exists
    // exactly when the residual scalar is a square.
    Fq2 mu = F.solve_norm(F.fq_inv(a));
    SemilinearMap f1{mat_scale(F, mu, f.mat), Tau::Identity};
    auto lam_opt = projective_involution_scalar(F, f1);
    Fq2 lam = *lam_opt;
    if (F.is_one(lam)) return f1;
    if (!F.is_square(lam)) fail(Errc::NotAFlip, "no involutive scalar multiple exists");
    Fq2 eta = F.sqrt(F.inv(lam));
    return {mat_scale(F, eta, f1.mat), Tau::Identity};
  }

  // sigma-semilinear: f^2 = lambda id forces lambda into F_q, and any
  // mu with N(mu) = lambda^{-1} yields an involution.
  Fq2 lam = *lambda0;
  if (!F.in_base(lam)) fail(Errc::NotAFlip, "square scalar of a semilinear map must be rational");
  Fq2 mu = F.solve_norm(F.fq_inv(lam.a0));
  return {mat_scale(F, mu, f.mat), Tau::Frobenius};
}

std::optional<std::vector<Vec>> witness_points(const HermitianSpace& space,
                                               const SemilinearMap& normalized) {
  const Field& F = space.field();
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, normalized);
  Subspace W = Subspace::full(space.dim());
  std::vector<Vec> points;
  for (int i = 0; i < space.n(); ++i) {
    bool found = false;
    uint64_t total = vector_count(F, W);
    for (uint64_t t = 1; t < total; ++t) {
      Vec v = vector_at(F, W, t);
      if (!F.is_zero(eval_form(F, beta, v, v))) continue;
      if (F.is_zero(eval_form(F, bphi, v, v))) continue;
      points.push_back(v);
      W = intersect(F, W, biorthogonal_perp(F, beta, bphi, Subspace::span(F, {v}, space.dim())));
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return points;
}

Chamber witness_chamber(const HermitianSpace& space, const SemilinearMap& normalized) {
  const Field& F = space.field();
  std::optional<std::vector<Vec>> pts;
  try {
    pts = witness_points(space, normalized);
  } catch (const Error&) {
    fail(Errc::NotAFlip, "map is not an involution");
  }
  if (!pts) fail(Errc::NotAFlip, "no chamber is mapped to an opposite chamber");
  Chamber C;
  Matrix rows(0, space.dim());
  for (const Vec& u : *pts) {
    rows.append_row(u);
    C.flag.push_back(Subspace::span(F, rows));
  }
  return C;
}

bool is_flip(const HermitianSpace& space, const SemilinearMap& f) {
  try {
    SemilinearMap g = normalize_flip(space, f);
    return witness_points(space, g).has_value();
  } catch (const Error&) {
    return false;
  }
}

namespace {

// First vector of U (canonical order) that is beta-isotropic with
// beta_phi(v, v) != 0 and, when `want_square` is set, of the requested
// square class.  kind: 0 = any, 1 = square, -1 = non-square.
std::optional<Vec> first_point_in(const HermitianSpace& space, const SesquiForm& bphi,
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

ClassifiedFlip classify(const HermitianSpace& space, const SemilinearMap& f) {
  const Field& F = space.field();
  int n = space.n();
  SemilinearMap g = normalize_flip(space, f);
  auto pts = witness_points(space, g);
  if (!pts) fail(Errc::NotAFlip, "no chamber is mapped to an opposite chamber");
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, g);

  FlipClass cls;
  Fq2 scalar = F.one();
  std::vector<Vec> es, fs;

  if (g.tau == Tau::Identity) {
    bool isometry = similitude_factor(space, g) == 1;
    cls = isometry ? FlipClass::I_LinearIsometry : FlipClass::II_LinearAntiIsometry;
    Fq2 alpha = F.omega();
    if (!isometry) scalar = alpha;
    for (const Vec& u : *pts) {
      Fq2 c = eval_form(F, bphi, u, u);
      if (isometry) {
        // c is rational; pick N(gamma) = c^{-1} so (e, phi(e)) is hyperbolic.
        if (!F.in_base(c)) throw std::logic_error("hermitian diagonal must be rational");
        Fq2 gamma = F.solve_norm(F.fq_inv(c.a0));
        Vec e = vec_scale(F, gamma, u);
        es.push_back(e);
        fs.push_back(apply(F, g, e));
      } else {
        // c has trace 0; C -alpha c^{-1} is rational and N(gamma) = -alpha c^{-1}
        // makes beta(e, alpha^{-1} phi(e)) = 1.
        Fq2 t = F.neg(F.mul(alpha, F.inv(c)));
        if (!F.in_base(t)) throw std::logic_error("antihermitian diagonal must have trace 0");
        Fq2 gamma = F.solve_norm(t.a0);
        Vec e = vec_scale(F, gamma, u);
        es.push_back(e);
        fs.push_back(vec_scale(F, F.inv(alpha), apply(F, g, e)));
      }
    }
  } else {
    Subspace M = Subspace::span(F, *pts, space.dim());
    Fq2 dM = det(F, gram_on(F, bphi, M.basis()));
    bool square_type = F.is_square(dM);
    cls = square_type ? FlipClass::III_SemilinearSquare : FlipClass::IV_SemilinearNonSquare;
    Fq2 lambda = F.smallest_nonsquare();
    if (!square_type) scalar = lambda;

    // Rebuild the point basis of M with controlled square classes: all
    // square type, except one non-square point in the last slot for IV.
    std::vector<Vec> us;
    Subspace rest = M;
    Vec last;
    if (!square_type) {
      auto u = first_point_in(space, bphi, rest, -1);
      if (!u) throw std::logic_error("non-square point must exist in a non-square maximal object");
      last = *u;
      rest = intersect(F, rest,
                       biorthogonal_perp(F, beta, bphi, Subspace::span(F, {last}, space.dim())));
    }
    int squares_needed = square_type ? n : n - 1;
    for (int i = 0; i < squares_needed; ++i) {
      auto u = first_point_in(space, bphi, rest, 1);
      if (!u) throw std::logic_error("square point must exist");
      us.push_back(*u);
      rest = intersect(F, rest,
                       biorthogonal_perp(F, beta, bphi, Subspace::span(F, {*u}, space.dim())));
    }
    if (!square_type) us.push_back(last);

    for (int i = 0; i < n; ++i) {
      Fq2 c = eval_form(F, bphi, us[i], us[i]);
      if (square_type || i + 1 < n) {
        // beta_phi is bilinear: gamma^2 c = 1.
        Fq2 gamma = F.sqrt(F.inv(c));
        Vec e = vec_scale(F, gamma, us[i]);
        es.push_back(e);
        fs.push_back(apply(F, g, e));
      } else {
        // Last slot of IV: aim beta_phi(e, e) = sigma(lambda), then
        // f := lambda^{-1} phi(e) completes the hyperbolic pair.
        Fq2 gamma = F.sqrt(F.mul(F.frobenius(lambda), F.inv(c)));
        Vec e = vec_scale(F, gamma, us[i]);
        es.push_back(e);
        fs.push_back(vec_scale(F, F.inv(lambda), apply(F, g, e)));
      }
    }
  }

  std::vector<Vec> basis = es;
  basis.insert(basis.end(), fs.begin(), fs.end());

  // Constructive certificate: re-verify every claimed relation.
  Matrix B = Matrix::from_rows(basis);
  if (gram_on(F, beta, B) != space.gram())
    throw std::logic_error("witness basis is not hyperbolic");
  for (int i = 0; i < n; ++i) {
    Vec fe = apply(F, g, es[i]);
    Vec ff = apply(F, g, fs[i]);
    bool ok = true;
    switch (cls) {
      case FlipClass::I_LinearIsometry:
      case FlipClass::III_SemilinearSquare:
        ok = fe == fs[i] && ff == es[i];
        break;
      case FlipClass::II_LinearAntiIsometry:
        ok = fe == vec_scale(F, scalar, fs[i]) && ff == vec_scale(F, F.inv(scalar), es[i]);
        break;
      case FlipClass::IV_SemilinearNonSquare:
        if (i + 1 < n)
          ok = fe == fs[i] && ff == es[i];
        else
          ok = fe == vec_scale(F, scalar, fs[i]) &&
               ff == vec_scale(F, F.frobenius(F.inv(scalar)), es[i]);
        break;
    }
    if (!ok) throw std::logic_error("flip relations fail on the witness basis");
  }
  int64_t sign = similitude_factor(space, g);
  bool sign_ok = cls == FlipClass::II_LinearAntiIsometry ? sign == F.q() - 1 : sign == 1;
  if (!sign_ok) throw std::logic_error("normalized similitude sign mismatch");

  return {cls, g, std::move(basis), scalar};
}

}  // namespace uniflip
