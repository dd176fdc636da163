#include <doctest.h>

#include "uniflip/classify.hpp"
#include "uniflip/sampling.hpp"

using namespace uniflip;

namespace {

const FlipClass kClasses[] = {FlipClass::I_LinearIsometry, FlipClass::II_LinearAntiIsometry,
                              FlipClass::III_SemilinearSquare, FlipClass::IV_SemilinearNonSquare};

}

TEST_CASE("canonical flip matrices") {
  Field F(3);
  HermitianSpace line(1, F);
  SemilinearMap f1 = canonical_flip(line, FlipClass::I_LinearIsometry);
  CHECK(f1.tau == Tau::Identity);
  CHECK(f1.mat == line.gram());  // [[0,1],[1,0]]

  SemilinearMap f2 = canonical_flip(line, FlipClass::II_LinearAntiIsometry);
  CHECK(apply(F, f2, line.e(0)) == vec_scale(F, F.omega(), line.f(0)));
  CHECK(apply(F, f2, line.f(0)) == vec_scale(F, F.inv(F.omega()), line.e(0)));
  CHECK(similitude_factor(line, f2) == F.q() - 1);

  HermitianSpace space(2, F);
  SemilinearMap f4 = canonical_flip(space, FlipClass::IV_SemilinearNonSquare);
  Fq2 lambda = F.smallest_nonsquare();
  CHECK(lambda == F.make(1, 1));
  CHECK(apply(F, f4, space.e(1)) == vec_scale(F, lambda, space.f(1)));
  CHECK(apply(F, f4, space.f(1)) == vec_scale(F, F.frobenius(F.inv(lambda)), space.e(1)));
  CHECK(square_map(F, f4).mat == Matrix::identity(4));
}

TEST_CASE("canonical flips are flips") {
  for (int64_t q : {3, 5}) {
    Field F(q);
    for (int n : {1, 2}) {
      HermitianSpace space(n, F);
      for (FlipClass cls : kClasses) CHECK(is_flip(space, canonical_flip(space, cls)));
    }
  }
}

TEST_CASE("non-flips are rejected") {
  Field F(3);
  HermitianSpace space(2, F);
  SemilinearMap id{Matrix::identity(4), Tau::Identity};
  CHECK(!is_flip(space, id));
  CHECK_THROWS_AS(classify(space, id), Error);
  try {
    classify(space, id);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAFlip);
  }
  // -id maps every chamber to itself.
  SemilinearMap neg_id{mat_scale(F, F.neg(F.one()), Matrix::identity(4)), Tau::Identity};
  CHECK(!is_flip(space, neg_id));
  // Swap one hyperbolic pair, fix the other: involutive isometry, no flipped
  // chamber (exhaustively cross-checked in the verification suite).
  Matrix M = Matrix::identity(4);
  M.at(1, 1) = M.at(3, 3) = F.zero();
  M.at(1, 3) = M.at(3, 1) = F.one();
  CHECK(!is_flip(space, SemilinearMap{M, Tau::Identity}));
  // A shear is not even a projective involution.
  Matrix S = Matrix::identity(4);
  S.at(0, 1) = F.one();
  CHECK(!is_flip(space, SemilinearMap{S, Tau::Identity}));
}

TEST_CASE("normalize") {
  Field F(3);
  HermitianSpace space(2, F);
  Sampler rng(13);
  SemilinearMap f1 = canonical_flip(space, FlipClass::I_LinearIsometry);
  CHECK(normalize_flip(space, f1).mat == f1.mat);

  // Norm-1 scalar multiples of class III normalize back to an involutive
  // isometry.
  SemilinearMap f3 = canonical_flip(space, FlipClass::III_SemilinearSquare);
  for (int t = 0; t < 20; ++t) {
    Fq2 mu = rng.nonzero(F);
    mu = F.mul(mu, F.inv(F.solve_norm(F.norm(mu))));  // norm 1
    CHECK(F.norm(mu) == 1);
    SemilinearMap g = normalize_flip(space, SemilinearMap{mat_scale(F, mu, f3.mat), Tau::Frobenius});
    CHECK(square_map(F, g).mat == Matrix::identity(4));
    CHECK(similitude_factor(space, g) == 1);
  }

  // lambda * (class I) with N(lambda) = 1 and lambda square returns +-(class I).
  for (int t = 0; t < 20; ++t) {
    Fq2 lam = rng.nonzero(F);
    lam = F.mul(lam, F.inv(F.solve_norm(F.norm(lam))));
    if (!F.is_square(lam)) continue;
    SemilinearMap g = normalize_flip(space, SemilinearMap{mat_scale(F, lam, f1.mat), Tau::Identity});
    bool plus = g.mat == f1.mat;
    bool minus = g.mat == mat_scale(F, F.neg(F.one()), f1.mat);
    CHECK((plus || minus));
  }
}

TEST_CASE("classification round-trips at small parameters") {
  for (auto [n, q] : {std::pair{1, 3}, {1, 5}, {2, 3}}) {
    Field F(q);
    HermitianSpace space(n, F);
    for (FlipClass cls : kClasses) {
      ClassifiedFlip cf = classify(space, canonical_flip(space, cls));
      CHECK(cf.cls == cls);
      CHECK(gram_on(F, space.beta_form(), Matrix::from_rows(cf.basis)) == space.gram());
      CHECK(square_map(F, cf.map).mat == Matrix::identity(space.dim()));
      // Class scalars are the canonical ones.
      if (cls == FlipClass::II_LinearAntiIsometry) CHECK(cf.scalar == F.omega());
      if (cls == FlipClass::IV_SemilinearNonSquare) CHECK(cf.scalar == F.smallest_nonsquare());
      if (cls == FlipClass::I_LinearIsometry || cls == FlipClass::III_SemilinearSquare)
        CHECK(F.is_one(cf.scalar));
    }
  }
}

TEST_CASE("witness basis satisfies the flip relations exactly") {
  Field F(3);
  HermitianSpace space(2, F);
  int n = 2;
  for (FlipClass cls : kClasses) {
    ClassifiedFlip cf = classify(space, canonical_flip(space, cls));
    for (int i = 0; i < n; ++i) {
      Vec fe = apply(F, cf.map, cf.basis[i]);
      Vec ff = apply(F, cf.map, cf.basis[n + i]);
      switch (cls) {
        case FlipClass::I_LinearIsometry:
        case FlipClass::III_SemilinearSquare:
          CHECK(fe == cf.basis[n + i]);
          CHECK(ff == cf.basis[i]);
          break;
        case FlipClass::II_LinearAntiIsometry:
          CHECK(fe == vec_scale(F, cf.scalar, cf.basis[n + i]));
          CHECK(ff == vec_scale(F, F.inv(cf.scalar), cf.basis[i]));
          break;
        case FlipClass::IV_SemilinearNonSquare:
          if (i + 1 < n) {
            CHECK(fe == cf.basis[n + i]);
            CHECK(ff == cf.basis[i]);
          } else {
            CHECK(fe == vec_scale(F, cf.scalar, cf.basis[n + i]));
            CHECK(ff == vec_scale(F, F.frobenius(F.inv(cf.scalar)), cf.basis[i]));
          }
          break;
      }
    }
  }
}

TEST_CASE("witness chamber") {
  Field F(3);
  HermitianSpace space(2, F);
  SemilinearMap f1 = canonical_flip(space, FlipClass::I_LinearIsometry);
  Chamber C = witness_chamber(space, f1);
  // The standard basis is already adapted, so the search finds it first.
  CHECK(C.flag[0] == Subspace::span(F, {space.e(0)}, 4));
  CHECK(C.flag[1] == Subspace::span(F, {space.e(0), space.e(1)}, 4));
  for (FlipClass cls : kClasses) {
    SemilinearMap f = normalize_flip(space, canonical_flip(space, cls));
    Chamber W = witness_chamber(space, f);
    CHECK(is_chamber(space, W.flag));
    SesquiForm bphi = beta_phi(space, f);
    for (const Subspace& Ci : W.flag) CHECK(is_nondegenerate_on(F, bphi, Ci));
    CHECK(is_opposite(space, W, apply_to_chamber(F, f, W)));
  }
  SemilinearMap id{Matrix::identity(4), Tau::Identity};
  CHECK_THROWS_AS(witness_chamber(space, id), Error);
}

TEST_CASE("witness chambers of conjugated flips") {
  Field F(3);
  HermitianSpace space(2, F);
  Sampler rng(19);
  for (FlipClass cls : kClasses) {
    SemilinearMap f = canonical_flip(space, cls);
    for (int t = 0; t < 20; ++t) {
      SemilinearMap g{rng.unitary(space), Tau::Identity};
      SemilinearMap conj = compose(F, g, compose(F, f, semilinear_inverse(F, g)));
      SemilinearMap norm = normalize_flip(space, conj);
      Chamber W = witness_chamber(space, norm);
      SesquiForm bphi = beta_phi(space, norm);
      for (const Subspace& Ci : W.flag) {
        CHECK(is_totally_isotropic(space, Ci));
        CHECK(is_nondegenerate_on(F, bphi, Ci));
      }
      CHECK(classify(space, conj).cls == cls);
    }
  }
}
