#include <benchmark/benchmark.h>

#include "uniflip/sampling.hpp"
#include "uniflip/stabilizer.hpp"

using namespace uniflip;

namespace {

void BM_FieldMul(benchmark::State& state) {
  Field F(static_cast<int64_t>(state.range(0)));
  Sampler rng(1);
  Fq2 a = rng.nonzero(F), b = rng.nonzero(F);
  for (auto _ : state) {
    a = F.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(5)->Arg(101);

void BM_FieldInv(benchmark::State& state) {
  Field F(static_cast<int64_t>(state.range(0)));
  Sampler rng(2);
  Fq2 a = rng.nonzero(F);
  for (auto _ : state) {
    a = F.inv(a);
    benchmark::DoNotOptimize(a);
    a = F.add(a, F.one());
    if (F.is_zero(a)) a = F.one();
  }
}
BENCHMARK(BM_FieldInv)->Arg(3)->Arg(101);

void BM_Rref(benchmark::State& state) {
  Field F(5);
  Sampler rng(3);
  Matrix A = rng.matrix(F, 8, 8);
  for (auto _ : state) {
    auto r = rref(F, A);
    benchmark::DoNotOptimize(r.pivots.size());
  }
}
BENCHMARK(BM_Rref);

void BM_Beta(benchmark::State& state) {
  Field F(5);
  HermitianSpace space(4, F);
  Sampler rng(4);
  Vec u = rng.vector(F, 8), v = rng.vector(F, 8);
  for (auto _ : state) benchmark::DoNotOptimize(space.beta(u, v));
}
BENCHMARK(BM_Beta);

void BM_EnumerateIsotropicPoints(benchmark::State& state) {
  Field F(3);
  HermitianSpace space(2, F);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_isotropic(space, 1).size());
}
BENCHMARK(BM_EnumerateIsotropicPoints);

void BM_EnumerateChambers23(benchmark::State& state) {
  Field F(3);
  HermitianSpace space(2, F);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(space).size());
}
BENCHMARK(BM_EnumerateChambers23);

void BM_ClassifyCanonical(benchmark::State& state) {
  Field F(3);
  HermitianSpace space(2, F);
  SemilinearMap f = canonical_flip(space, FlipClass::IV_SemilinearNonSquare);
  for (auto _ : state) benchmark::DoNotOptimize(classify(space, f).cls);
}
BENCHMARK(BM_ClassifyCanonical);

void BM_ClassifyConjugate(benchmark::State& state) {
  Field F(3);
  HermitianSpace space(2, F);
  Sampler rng(5);
  SemilinearMap f = canonical_flip(space, FlipClass::I_LinearIsometry);
  SemilinearMap g{rng.unitary(space), Tau::Identity};
  SemilinearMap conj = compose(F, g, compose(F, f, semilinear_inverse(F, g)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(space, conj).cls);
}
BENCHMARK(BM_ClassifyConjugate);

void BM_IsOpposite(benchmark::State& state) {
  Field F(3);
  HermitianSpace space(2, F);
  auto chambers = enumerate_chambers(space);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_opposite(space, chambers[i % chambers.size()],
                                         chambers[(i * 7 + 13) % chambers.size()]));
    ++i;
  }
}
BENCHMARK(BM_IsOpposite);

void BM_Transporter(benchmark::State& state) {
  Field F(3);
  HermitianSpace space(2, F);
  ClassifiedFlip cf = classify(space, canonical_flip(space, FlipClass::I_LinearIsometry));
  auto chambers = geometry_chambers(space, build_geometry(space, cf, Variant::Full));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transporter(space, cf, chambers[i % chambers.size()],
                                         chambers[(i * 11 + 5) % chambers.size()]));
    ++i;
  }
}
BENCHMARK(BM_Transporter);

void BM_StabilizerOrderQ3(benchmark::State& state) {
  Field F(3);
  HermitianSpace line(1, F);
  ClassifiedFlip cf = classify(line, canonical_flip(line, FlipClass::III_SemilinearSquare));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stabilizer_order(line, cf));
}
BENCHMARK(BM_StabilizerOrderQ3);

}  // namespace

BENCHMARK_MAIN();
