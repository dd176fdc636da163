#include "uniflip/geometry.hpp"

#include <algorithm>

namespace uniflip {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Full: return "full";
    case Variant::Plus: return "plus";
    case Variant::Minus: return "minus";
  }
  return "?";
}

bool is_semilinear_class(FlipClass cls) {
  return cls == FlipClass::III_SemilinearSquare || cls == FlipClass::IV_SemilinearNonSquare;
}

int disc_sign(const Field& F, const SesquiForm& bphi, const Subspace& U) {
  Fq2 d = det(F, gram_on(F, bphi, U.basis()));
  if (F.is_zero(d)) fail(Errc::DegenerateSubspace, "beta_phi degenerates on the subspace");
  return F.is_square(d) ? 1 : -1;
}

int disc(const HermitianSpace& space, const ClassifiedFlip& flip, const Subspace& U) {
  if (!is_semilinear_class(flip.cls))
    fail(Errc::WrongClass, "disc is defined for sigma-semilinear flips only");
  return disc_sign(space.field(), beta_phi(space, flip.map), U);
}

Geometry build_geometry_on(const HermitianSpace& space, const ClassifiedFlip& flip,
                           Variant variant, const Subspace& ambient,
                           const EnumerationGuard& guard) {
  const Field& F = space.field();
  bool semilinear = is_semilinear_class(flip.cls);
  if (variant != Variant::Full && !semilinear)
    fail(Errc::VariantRequiresSemilinear, "plus/minus geometries need a semilinear flip");
  SesquiForm bphi = beta_phi(space, flip.map);
  Geometry g{flip, variant, ambient, static_cast<int>(ambient.dim() / 2), {}};
  for (int k = 1; k <= g.rank; ++k) {
    std::vector<GeometryObject> layer;
    for (const Subspace& U : enumerate_isotropic_in(space, ambient, k, guard)) {
      Fq2 d = det(F, gram_on(F, bphi, U.basis()));
      if (F.is_zero(d)) continue;
      int dsc = semilinear ? (F.is_square(d) ? 1 : -1) : 0;
      if (variant == Variant::Plus && k != g.rank && dsc != 1) continue;
      if (variant == Variant::Minus && k != g.rank && dsc != -1) continue;
      layer.push_back({U, dsc});
    }
    g.by_dim.push_back(std::move(layer));
  }
  return g;
}

Geometry build_geometry(const HermitianSpace& space, const ClassifiedFlip& flip, Variant variant,
                        const EnumerationGuard& guard) {
  return build_geometry_on(space, flip, variant, Subspace::full(space.dim()), guard);
}

Vec find_point(const HermitianSpace& space, const ClassifiedFlip& flip, const Subspace& U) {
  const Field& F = space.field();
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, flip.map);
  uint64_t total = vector_count(F, U);
  for (uint64_t t = 1; t < total; ++t) {
    Vec v = vector_at(F, U, t);
    if (!F.is_zero(eval_form(F, beta, v, v))) continue;
    if (F.is_zero(eval_form(F, bphi, v, v))) continue;
    return v;
  }
  fail(Errc::NoPoint, "subspace contains no point of the geometry");
}

std::vector<Vec> biorthogonal_basis(const HermitianSpace& space, const ClassifiedFlip& flip,
                                    const Subspace& U) {
  const Field& F = space.field();
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, flip.map);
  std::vector<Vec> basis;
  Subspace rest = U;
  while (rest.dim() > 0) {
    Vec w = find_point(space, flip, rest);
    basis.push_back(w);
    rest = intersect(F, rest,
                     biorthogonal_perp(F, beta, bphi, Subspace::span(F, {w}, space.dim())));
  }
  return basis;
}

GeometryObject extend_to_maximal(const HermitianSpace& space, const ClassifiedFlip& flip,
                                 const Subspace& U) {
  const Field& F = space.field();
  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, flip.map);
  Subspace M = U;
  while (M.dim() < static_cast<std::size_t>(space.n())) {
    Subspace doubled = sum(F, M, apply_to_subspace(F, flip.map, M));
    Subspace X = perp(F, beta, doubled);
    Vec u = find_point(space, flip, X);
    Matrix rows = M.basis();
    rows.append_row(u);
    M = Subspace::span(F, rows);
  }
  int d = is_semilinear_class(flip.cls) ? disc_sign(F, bphi, M) : 0;
  return {M, d};
}

bool incident(const Field& F, const Subspace& a, const Subspace& b) {
  if (a.dim() == b.dim()) return a == b;
  return a.dim() < b.dim() ? b.contains(F, a) : a.contains(F, b);
}

Subspace residue_map(const HermitianSpace& space, const ClassifiedFlip& flip, const Subspace& u,
                     const Subspace& X) {
  const Field& F = space.field();
  if (u.dim() != 1) fail(Errc::NotAPoint, "the residue map is taken at a point");
  return intersect(F, X,
                   biorthogonal_perp(F, space.beta_form(), beta_phi(space, flip.map), u));
}

Geometry residue(const HermitianSpace& space, const Geometry& geom, const Subspace& u) {
  const Field& F = space.field();
  if (u.dim() != 1) fail(Errc::NotAPoint, "residue is taken at a point");
  bool is_member = false;
  for (const GeometryObject& p : geom.objects(1))
    if (p.sub == u) {
      is_member = true;
      break;
    }
  if (!is_member) fail(Errc::NotAPoint, "not a point of this geometry");

  SesquiForm beta = space.beta_form();
  SesquiForm bphi = beta_phi(space, geom.flip.map);
  Subspace W = intersect(F, geom.ambient, biorthogonal_perp(F, beta, bphi, u));
  bool semilinear = is_semilinear_class(geom.flip.cls);

  Geometry out{geom.flip, geom.variant == Variant::Full ? Variant::Full : Variant::Plus, W,
               geom.rank - 1, {}};
  out.by_dim.resize(out.rank);
  for (int k = 2; k <= geom.rank; ++k) {
    for (const GeometryObject& X : geom.objects(k)) {
      if (!X.sub.contains(F, u)) continue;
      Subspace img = intersect(F, X.sub, W);
      int dsc = semilinear ? disc_sign(F, bphi, img) : 0;
      out.by_dim[k - 2].push_back({img, dsc});
    }
    auto& layer = out.by_dim[k - 2];
    std::sort(layer.begin(), layer.end(),
              [](const GeometryObject& a, const GeometryObject& b) { return a.sub < b.sub; });
  }
  return out;
}

namespace {

// All d-dimensional subspaces of U, via the same orderly RREF generation as
// the isotropic enumerator but without a form condition.  Feasible for the
// small coefficient dimensions that arise inside geometry objects.
std::vector<Subspace> all_subspaces_of(const Field& F, const Subspace& U, int d) {
  std::size_t m = U.dim();
  uint64_t Q = F.order();
  std::vector<Subspace> current;
  for (std::size_t lead = 0; lead < m; ++lead) {
    uint64_t tail_total = 1;
    for (std::size_t i = lead + 1; i < m; ++i) tail_total *= Q;
    for (uint64_t t = 0; t < tail_total; ++t) {
      Vec c(m);
      c[lead] = {1, 0};
      uint64_t rest = t;
      for (std::size_t i = lead + 1; i < m; ++i) {
        c[i] = F.element_at(rest % Q);
        rest /= Q;
      }
      current.push_back(Subspace::span(F, {c}, m));
    }
  }
  std::sort(current.begin(), current.end());
  for (int step = 2; step <= d; ++step) {
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
      // Extension rows live beyond all of W's pivots.
      for (std::size_t lead = max_pivot + 1; lead < m; ++lead) {
        bool column_clear = true;
        for (std::size_t i = 0; i < rows && column_clear; ++i)
          if (!F.is_zero(wb.at(i, lead))) column_clear = false;
        if (!column_clear) continue;
        uint64_t tail_total = 1;
        for (std::size_t i = lead + 1; i < m; ++i) tail_total *= Q;
        for (uint64_t t = 0; t < tail_total; ++t) {
          Vec x(m);
          x[lead] = {1, 0};
          uint64_t rest = t;
          bool reduced = true;
          for (std::size_t i = lead + 1; i < m; ++i) {
            x[i] = F.element_at(rest % Q);
            rest /= Q;
          }
          for (std::size_t i = 0; i < rows && reduced; ++i)
            if (!F.is_zero(x[pivots[i]])) reduced = false;
          if (!reduced) continue;
          Matrix ext = wb;
          ext.append_row(x);
          next.push_back(Subspace::span(F, ext));
        }
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  // Map from coefficient space to the ambient space.
  std::vector<Subspace> out;
  out.reserve(current.size());
  for (const Subspace& S : current) {
    Matrix rows(0, U.ambient());
    for (std::size_t i = 0; i < S.dim(); ++i)
      rows.append_row(row_times_matrix(F, S.basis_row(i), U.basis()));
    out.push_back(Subspace::span(F, rows));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Containment adjacency between geometry layers, objects referenced by
// their index in the sorted per-dimension lists.
struct IncidenceIndex {
  int rank = 0;
  // down[a][b][i]: indices of b-objects contained in the i-th a-object
  // (b < a); up[b][a][j]: transpose.
  std::vector<std::vector<std::vector<std::vector<uint32_t>>>> down, up;

  const std::vector<uint32_t>& contained(int a, int b, uint32_t i) const { return down[a][b][i]; }
  const std::vector<uint32_t>& containing(int b, int a, uint32_t j) const { return up[b][a][j]; }
};

std::optional<uint32_t> locate(const std::vector<GeometryObject>& layer, const Subspace& s) {
  auto it = std::lower_bound(layer.begin(), layer.end(), s,
                             [](const GeometryObject& o, const Subspace& x) { return o.sub < x; });
  if (it == layer.end() || it->sub != s) return std::nullopt;
  return static_cast<uint32_t>(it - layer.begin());
}

IncidenceIndex build_index(const Field& F, const Geometry& geom) {
  IncidenceIndex idx;
  idx.rank = geom.rank;
  idx.down.assign(geom.rank + 1, {});
  idx.up.assign(geom.rank + 1, {});
  for (int a = 1; a <= geom.rank; ++a) {
    idx.down[a].assign(geom.rank + 1, {});
    idx.up[a].assign(geom.rank + 1, {});
  }
  for (int a = 2; a <= geom.rank; ++a)
    for (int b = 1; b < a; ++b) {
      auto& down = idx.down[a][b];
      auto& up = idx.up[b][a];
      down.assign(geom.objects(a).size(), {});
      up.assign(geom.objects(b).size(), {});
      for (uint32_t i = 0; i < geom.objects(a).size(); ++i) {
        for (const Subspace& S : all_subspaces_of(F, geom.objects(a)[i].sub, b)) {
          auto j = locate(geom.objects(b), S);
          if (!j) continue;
          down[i].push_back(*j);
          up[*j].push_back(i);
        }
      }
      for (auto& v : up) std::sort(v.begin(), v.end());
    }
  return idx;
}

struct ChainMember {
  int dim;
  uint32_t index;
};

// Candidates of type d incident to the whole chain: contained in the
// nearest member above, containing the nearest member below.
std::vector<uint32_t> chain_candidates(const Geometry& geom, const IncidenceIndex& idx,
                                       const std::vector<ChainMember>& chain, int d) {
  const ChainMember* below = nullptr;
  const ChainMember* above = nullptr;
  for (const ChainMember& m : chain) {
    if (m.dim < d) below = &m;
    if (m.dim > d && !above) above = &m;
  }
  std::vector<uint32_t> cands;
  if (above) {
    cands = idx.contained(above->dim, d, above->index);
    if (below) {
      std::vector<uint32_t> filtered;
      for (uint32_t y : cands) {
        const auto& subs = idx.contained(d, below->dim, y);
        if (std::binary_search(subs.begin(), subs.end(), below->index)) filtered.push_back(y);
      }
      cands = std::move(filtered);
    }
  } else if (below) {
    cands = idx.containing(below->dim, d, below->index);
  } else {
    cands.resize(geom.objects(d).size());
    for (uint32_t i = 0; i < cands.size(); ++i) cands[i] = i;
  }
  return cands;
}

// DFS over chains in increasing type so each flag is visited exactly once.
bool walk_chains(const Geometry& geom, const IncidenceIndex& idx,
                 std::vector<ChainMember>& chain, std::vector<std::vector<Subspace>>* collect) {
  bool extendable = false;
  int max_dim = chain.empty() ? 0 : chain.back().dim;
  for (int d = 1; d <= geom.rank; ++d) {
    bool have_type = false;
    for (const ChainMember& m : chain)
      if (m.dim == d) have_type = true;
    if (have_type) continue;
    std::vector<uint32_t> cands = chain_candidates(geom, idx, chain, d);
    if (!cands.empty()) extendable = true;
    if (d < max_dim) continue;
    for (uint32_t y : cands) {
      chain.push_back({d, y});
      if (!walk_chains(geom, idx, chain, collect)) return false;
      chain.pop_back();
    }
  }
  if (!extendable) {
    bool full = chain.size() == static_cast<std::size_t>(geom.rank);
    if (!full && !collect) return false;
    if (collect && full) {
      std::vector<Subspace> flag;
      for (const ChainMember& m : chain) flag.push_back(geom.objects(m.dim)[m.index].sub);
      collect->push_back(std::move(flag));
    }
  }
  return true;
}

}  // namespace

bool is_transversal(const HermitianSpace& space, const Geometry& geom) {
  const Field& F = space.field();
  for (int d = 1; d <= geom.rank; ++d)
    if (geom.objects(d).empty()) return false;
  IncidenceIndex idx = build_index(F, geom);
  std::vector<ChainMember> chain;
  return walk_chains(geom, idx, chain, nullptr);
}

std::vector<std::vector<Subspace>> geometry_chambers(const HermitianSpace& space,
                                                     const Geometry& geom) {
  const Field& F = space.field();
  IncidenceIndex idx = build_index(F, geom);
  std::vector<std::vector<Subspace>> out;
  std::vector<ChainMember> chain;
  walk_chains(geom, idx, chain, &out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> orthogonal_extension(const HermitianSpace& space, const ClassifiedFlip& flip,
                                      const Subspace& W, const Subspace& M) {
  const Field& F = space.field();
  if (M.dim() != static_cast<std::size_t>(space.n()))
    fail(Errc::DimensionMismatch, "M must be a maximal object");
  if (!M.contains(F, W)) fail(Errc::NotContained, "W must be contained in M");
  std::vector<Vec> basis = biorthogonal_basis(space, flip, W);
  Subspace doubled = sum(F, W, apply_to_subspace(F, flip.map, W));
  Subspace X = intersect(F, perp(F, space.beta_form(), doubled), M);
  for (const Vec& w : biorthogonal_basis(space, flip, X)) basis.push_back(w);
  return basis;
}

}  // namespace uniflip
