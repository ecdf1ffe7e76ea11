#include <benchmark/benchmark.h>

#include "amol/approx.hpp"
#include "amol/cartoon.hpp"
#include "amol/consistency.hpp"
#include "amol/frame.hpp"
#include "amol/gramian.hpp"

using namespace amol;

static void BM_CurveletAnalyze(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto fr = build_curvelet_frame(0.5, max_curvelet_scale(n), n);
  const Image f = random_bandlimited_image(n, 0.9 * fr.covered_radius, 1);
  for (auto _ : st) benchmark::DoNotOptimize(fr.analyze(f));
}
BENCHMARK(BM_CurveletAnalyze)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_CurveletSynthesize(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto fr = build_curvelet_frame(0.5, max_curvelet_scale(n), n);
  const auto c = fr.analyze(random_bandlimited_image(n, 0.9 * fr.covered_radius, 1));
  for (auto _ : st) benchmark::DoNotOptimize(fr.synthesize(c));
}
BENCHMARK(BM_CurveletSynthesize)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_CrossInnerProduct(benchmark::State& st) {
  const auto C = build_curvelet_frame(0.5, 6, 256);
  const auto S = build_shearlet_frame(2.0, 1.0, 5, 256);
  const auto lam = C.size() / 2, mu = S.size() / 2;
  for (auto _ : st) benchmark::DoNotOptimize(cross_inner_product(C, lam, S, mu));
}
BENCHMARK(BM_CrossInnerProduct)->Unit(benchmark::kMicrosecond);

static void BM_SampleGramian(benchmark::State& st) {
  const auto C = build_curvelet_frame(0.5, 6, 256);
  const auto S = build_shearlet_frame(2.0, 1.0, 5, 256);
  for (auto _ : st) benchmark::DoNotOptimize(sample_gramian(C, S, 1000, 1));
}
BENCHMARK(BM_SampleGramian)->Unit(benchmark::kMillisecond);

static void BM_ConsistencySum(benchmark::State& st) {
  const auto c = make_curvelet_parametrization(0.5);
  const Truncation t{static_cast<int>(st.range(0)), 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(consistency_sum(c, c, 0.5, 2.5, t));
}
BENCHMARK(BM_ConsistencySum)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CartoonGenerate(benchmark::State& st) {
  const auto spec = random_cartoon_spec(2.0, 1);
  for (auto _ : st) benchmark::DoNotOptimize(generate_cartoon(spec, 256));
}
BENCHMARK(BM_CartoonGenerate)->Unit(benchmark::kMillisecond);

static void BM_NTerm(benchmark::State& st) {
  const auto fr = build_curvelet_frame(0.5, 6, 256);
  const Image f = generate_cartoon(random_cartoon_spec(2.0, 1), 256);
  const auto c = fr.analyze(f);
  for (auto _ : st) benchmark::DoNotOptimize(nterm(fr, c, f, 1024));
}
BENCHMARK(BM_NTerm)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
