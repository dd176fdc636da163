#include <doctest.h>

#include "uniflip/classify.hpp"
#include "uniflip/sampling.hpp"

using namespace uniflip;

TEST_CASE("standard space grams") {
  Field F(3);
  HermitianSpace s1(1, F);
  CHECK(s1.gram().at(0, 1) == F.one());
  CHECK(s1.gram().at(1, 0) == F.one());
  CHECK(F.is_zero(s1.gram().at(0, 0)));
  HermitianSpace s2(2, F);
  CHECK(s2.gram().at(0, 2) == F.one());
  CHECK(s2.gram().at(1, 3) == F.one());
  CHECK(s2.gram().at(2, 0) == F.one());
  CHECK(s2.gram().at(3, 1) == F.one());
  for (int n = 1; n <= 4; ++n) {
    HermitianSpace s(n, F);
    CHECK(conj_entries(F, transpose(s.gram())) == s.gram());
    CHECK(!F.is_zero(det(F, s.gram())));
  }
}

TEST_CASE("beta evaluation") {
  Field F(5);
  HermitianSpace space(2, F);
  CHECK(space.beta(space.e(0), space.f(0)) == F.one());
  CHECK(F.is_zero(space.beta(space.e(0), space.f(1))));
  CHECK(F.is_zero(space.beta(space.e(0), space.e(0))));
  CHECK(F.is_zero(space.beta(space.f(1), space.f(1))));
  Sampler rng(5);
  for (int t = 0; t < 100; ++t) {
    Vec u = rng.vector(F, 4), v = rng.vector(F, 4);
    Fq2 lam = rng.element(F), mu = rng.element(F);
    // Sesquilinearity: beta(lam u, mu v) = lam sigma(mu) beta(u, v).
    CHECK(space.beta(vec_scale(F, lam, u), vec_scale(F, mu, v)) ==
          F.mul(F.mul(lam, F.frobenius(mu)), space.beta(u, v)));
    // Hermitian symmetry.
    CHECK(space.beta(v, u) == F.frobenius(space.beta(u, v)));
  }
}

TEST_CASE("perp") {
  Field F(3);
  HermitianSpace space(2, F);
  Subspace e1 = Subspace::span(F, {space.e(0)}, 4);
  Subspace p = perp(F, space.beta_form(), e1);
  CHECK(p.dim() == 3);
  CHECK(p.contains(F, space.e(0)));
  CHECK(p.contains(F, space.e(1)));
  CHECK(p.contains(F, space.f(1)));
  CHECK(!p.contains(F, space.f(0)));
  CHECK(perp(F, space.beta_form(), Subspace::full(4)).dim() == 0);
  Sampler rng(17);
  for (int t = 0; t < 100; ++t) {
    Subspace U = rng.subspace(F, 4, 1 + rng.next(3));
    Subspace pp = perp(F, space.beta_form(), perp(F, space.beta_form(), U));
    CHECK(pp == U);
    CHECK(U.dim() + perp(F, space.beta_form(), U).dim() == 4);
  }
}

TEST_CASE("radical and isotropy") {
  Field F(3);
  HermitianSpace space(2, F);
  Subspace e1 = Subspace::span(F, {space.e(0)}, 4);
  CHECK(radical(F, space.beta_form(), e1) == e1);
  Subspace gen = Subspace::span(F, {space.e(0), space.e(1)}, 4);
  CHECK(is_totally_isotropic(space, gen));
  Subspace hyp = Subspace::span(F, {space.e(0), space.f(0)}, 4);
  CHECK(!is_totally_isotropic(space, hyp));
  CHECK(is_nondegenerate_on(F, space.beta_form(), hyp));
  CHECK(!is_nondegenerate_on(F, space.beta_form(), e1));
}

TEST_CASE("radicals of invariant subspaces agree for both forms") {
  Field F(3);
  HermitianSpace space(2, F);
  Sampler rng(23);
  for (FlipClass cls : {FlipClass::I_LinearIsometry, FlipClass::III_SemilinearSquare,
                        FlipClass::IV_SemilinearNonSquare}) {
    SemilinearMap f = canonical_flip(space, cls);
    SesquiForm bphi = beta_phi(space, f);
    for (int t = 0; t < 100; ++t) {
      Subspace U0 = rng.subspace(F, 4, 1 + rng.next(2));
      Subspace U = sum(F, U0, apply_to_subspace(F, f, U0));  // flip-invariant
      CHECK(radical(F, space.beta_form(), U) == radical(F, bphi, U));
    }
  }
}

TEST_CASE("perp interchange between the two forms") {
  // U^perp = phi(U)^{perp_phi} and <U, phi(U)>^perp = biorthogonal perp.
  Field F(3);
  HermitianSpace space(2, F);
  Sampler rng(29);
  for (FlipClass cls : {FlipClass::I_LinearIsometry, FlipClass::II_LinearAntiIsometry,
                        FlipClass::III_SemilinearSquare, FlipClass::IV_SemilinearNonSquare}) {
    SemilinearMap f = canonical_flip(space, cls);
    SesquiForm bphi = beta_phi(space, f);
    for (int t = 0; t < 50; ++t) {
      Subspace U = rng.subspace(F, 4, 1 + rng.next(3));
      Subspace img = apply_to_subspace(F, f, U);
      CHECK(perp(F, space.beta_form(), U) == perp(F, bphi, img));
      Subspace doubled = sum(F, U, img);
      CHECK(perp(F, space.beta_form(), doubled) ==
            biorthogonal_perp(F, space.beta_form(), bphi, U));
      CHECK(perp(F, bphi, doubled) == biorthogonal_perp(F, space.beta_form(), bphi, U));
    }
  }
}

TEST_CASE("exhaustive complement laws at rank 1") {
  Field F(3);
  HermitianSpace space(1, F);
  // All 10 projective points of F_9^2.
  for (uint64_t t = 1; t < 81; ++t) {
    Vec v = vector_at(F, Subspace::full(2), t);
    if (vec_is_zero(v)) continue;
    Subspace U = Subspace::span(F, {v}, 2);
    CHECK(U.dim() + perp(F, space.beta_form(), U).dim() == 2);
    CHECK(perp(F, space.beta_form(), perp(F, space.beta_form(), U)) == U);
  }
}
