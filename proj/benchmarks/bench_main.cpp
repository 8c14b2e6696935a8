#include <random>

#include <benchmark/benchmark.h>

#include "hyperweight/bounds.hpp"
#include "hyperweight/codes.hpp"
#include "hyperweight/torus.hpp"
#include "hyperweight/verify.hpp"
#include "hyperweight/weights.hpp"

using namespace hyperweight;

static void BM_FieldMul(benchmark::State& state) {
  const auto f = make_field(static_cast<std::uint64_t>(state.range(0)));
  const std::uint32_t q = f->q();
  std::uint32_t a = 1, b = q / 2 + 1;
  for (auto _ : state) {
    const FieldElement c = f->mul({a}, {b});
    benchmark::DoNotOptimize(c);
    a = c.rep ? c.rep : 1;
    b = b + 1 == q ? 1 : b + 1;
  }
}
BENCHMARK(BM_FieldMul)->Arg(5)->Arg(9)->Arg(64)->Arg(4096)->Arg(8192);

static void BM_CommonZeros(benchmark::State& state) {
  const auto f = make_field(5);
  const unsigned s = static_cast<unsigned>(state.range(0));
  const PointSet pts = enumerate_affine_torus(f, s);
  std::mt19937_64 rng(1);
  const auto fam = random_squarefree_family(rng, f, s, s / 2, 2, BoundVariant::kHomogeneous);
  for (auto _ : state) benchmark::DoNotOptimize(count_common_zeros(fam, pts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pts.size()));
}
BENCHMARK(BM_CommonZeros)->Arg(4)->Arg(6)->Arg(8);

static void BM_BuildAffine(benchmark::State& state) {
  const auto f = make_field(4);
  for (auto _ : state) benchmark::DoNotOptimize(build_affine_toric(f, static_cast<unsigned>(state.range(0)), 2));
}
BENCHMARK(BM_BuildAffine)->Arg(4)->Arg(6);

static void BM_GhwBrute(benchmark::State& state) {
  const LinearCode code = build_affine_toric(make_field(3), 5, 2);
  const unsigned r = static_cast<unsigned>(state.range(0));
  SearchOptions opts;
  opts.budget = ~0ull;
  for (auto _ : state) benchmark::DoNotOptimize(ghw_bruteforce(code, r, opts));
}
BENCHMARK(BM_GhwBrute)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MinDistance(benchmark::State& state) {
  const LinearCode code = build_squarefree_leq(make_field(4), 4, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(BM_MinDistance)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ShadowSize(benchmark::State& state) {
  const std::vector<ExponentVector> b{{1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(shadow_size(b, static_cast<std::uint32_t>(state.range(0)), 6));
}
BENCHMARK(BM_ShadowSize)->Arg(5)->Arg(32);

BENCHMARK_MAIN();
