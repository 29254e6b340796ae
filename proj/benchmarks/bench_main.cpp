#include <benchmark/benchmark.h>

#include "realbundles/census.hpp"
#include "realbundles/cocycle.hpp"

using namespace rbp;

namespace {

void BM_PolarDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(42);
  CMat m = rng.gaussian_matrix(n, n) + 3.0 * identity(n);
  for (auto _ : state) {
    PolarResult pr = polar_decompose(m);
    benchmark::DoNotOptimize(pr.unitary);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PolarDecompose)->DenseRange(2, 10, 2)->Complexity();

void BM_NormalizeCompact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GroupSpec g = make_group(Family::GL, n, RealStructure::CompactType);
  CentralClass c = trivial_central_class();
  auto classes = enumerate_classes(g, c);
  Cocycle sample = sample_orbit(g, c, classes[classes.size() / 2], 7);
  for (auto _ : state) {
    NormalizeResult nr = normalize(g, c, sample.h);
    benchmark::DoNotOptimize(nr.residual);
  }
}
BENCHMARK(BM_NormalizeCompact)->DenseRange(2, 8, 2);

void BM_NormalizeQuaternionic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GroupSpec g = make_group(Family::GL, n, RealStructure::Conjugation);
  CentralClass c = central_class(g, CentralLabel::MinusOne);
  auto classes = enumerate_classes(g, c);
  Cocycle sample = sample_orbit(g, c, classes[0], 11);
  for (auto _ : state) {
    NormalizeResult nr = normalize(g, c, sample.h);
    benchmark::DoNotOptimize(nr.residual);
  }
}
BENCHMARK(BM_NormalizeQuaternionic)->DenseRange(2, 8, 2);

void BM_Discreteness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GroupSpec g = make_group(Family::GL, n, RealStructure::CompactType);
  CMat h = CMat::Identity(n, n);
  h(n - 1, n - 1) = -1.0;
  for (auto _ : state) {
    DiscretenessReport rep = verify_discreteness(g, h);
    benchmark::DoNotOptimize(rep.dim_kernel_T);
  }
}
BENCHMARK(BM_Discreteness)->DenseRange(2, 5, 1);

void BM_EnumerateTypes(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  GroupSpec g = make_group(Family::GL, 3, RealStructure::CompactType);
  RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
  DegreeWindow window{0, 0};
  for (auto _ : state) {
    auto types = enumerate_types(g, curve, trivial_central_class(), window);
    benchmark::DoNotOptimize(types.size());
  }
}
BENCHMARK(BM_EnumerateTypes)->DenseRange(2, 6, 1);

void BM_BruteForceCensus(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  GroupSpec g = make_group(Family::GL, 5, RealStructure::CompactType);
  RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
  for (auto _ : state) {
    CensusResult res = brute_force_census(g, curve, 0);
    benchmark::DoNotOptimize(res.count);
  }
}
BENCHMARK(BM_BruteForceCensus)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
