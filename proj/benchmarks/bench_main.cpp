#include <benchmark/benchmark.h>

#include "pentagon/catalog.hpp"
#include "pentagon/drinfeld.hpp"
#include "pentagon/fock.hpp"
#include "pentagon/formal_algebra.hpp"
#include "pentagon/reconstruction.hpp"
#include "pentagon/relations.hpp"

using namespace pentagon;

static void BM_PentagonS3(benchmark::State& state) {
  const Operator s = canonical_element(example_constants("s3"));
  const EvalOptions opts{Strategy::BasisVectors, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_pentagon(s, opts).holds);
}
BENCHMARK(BM_PentagonS3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PentagonFullProductZ4(benchmark::State& state) {
  const Operator s = canonical_element(example_constants("zn:4"));
  const EvalOptions opts{Strategy::FullProduct, 1};
  for (auto _ : state) benchmark::DoNotOptimize(check_pentagon(s, opts).holds);
}
BENCHMARK(BM_PentagonFullProductZ4)->Unit(benchmark::kMillisecond);

static void BM_YangBaxterZ3(benchmark::State& state) {
  const RMatrix r = r_matrix(s_family(canonical_element(example_constants("zn:3"))));
  for (auto _ : state) benchmark::DoNotOptimize(check_yang_baxter(r).holds);
}
BENCHMARK(BM_YangBaxterZ3)->Unit(benchmark::kMillisecond);

static void BM_ReconstructS3(benchmark::State& state) {
  const Operator s = canonical_element(example_constants("s3"));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(s).dim);
}
BENCHMARK(BM_ReconstructS3)->Unit(benchmark::kMillisecond);

static void BM_DilogIdentity(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_dilog_identity(degree, false).holds);
}
BENCHMARK(BM_DilogIdentity)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_WeylPentagon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weyl_pentagon_check(static_cast<unsigned>(state.range(0))).holds);
}
BENCHMARK(BM_WeylPentagon)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
