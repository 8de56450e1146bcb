// Parallel kernels against their single-threaded references.

#include "spacecross/crossing.hpp"
#include "spacecross/generators.hpp"
#include "spacecross/sametype.hpp"
#include "spacecross/stair.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace spacecross;

namespace {

const SpatialDrawing& drawing(int n) {
  static std::map<int, SpatialDrawing> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, random_spatial_drawing(n, 3 * n, 64, 7)).first;
  return it->second;
}

void BM_CrossingsParallel(benchmark::State& st) {
  const auto& d = drawing(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_line_crossings(d).count);
}

void BM_CrossingsSerial(benchmark::State& st) {
  const auto& d = drawing(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_line_crossings_serial(d).count);
}

void BM_CrossingsFloat(benchmark::State& st) {
  const auto& d = drawing(static_cast<int>(st.range(0)));
  CrossingOptions opt;
  opt.mode = Mode::Float;
  for (auto _ : st) benchmark::DoNotOptimize(count_line_crossings(d, opt).count);
}

void BM_CandidatesParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_candidate_quadruples(n, 3 * n).count);
}

void BM_CandidatesSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_candidate_quadruples_serial(n, 3 * n));
}

void BM_SameTypeVerify(benchmark::State& st) {
  const auto inst = random_same_type_instance(81, 11);
  const auto refined = same_type_refine(inst.sets, inst.polys);
  for (auto _ : st) benchmark::DoNotOptimize(sign_constant(inst.sets, inst.polys, refined.retained));
}

void BM_SameTypeRefine(benchmark::State& st) {
  const auto inst = random_same_type_instance(81, 11);
  for (auto _ : st) benchmark::DoNotOptimize(same_type_refine(inst.sets, inst.polys).signs);
}

void BM_YaoYao2D(benchmark::State& st) {
  const auto F = random_multiset(2, static_cast<int>(st.range(0)), 16, 3);
  for (auto _ : st) benchmark::DoNotOptimize(yao_yao_partition(F).scale);
}

}  // namespace

BENCHMARK(BM_CrossingsParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingsSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingsFloat)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CandidatesParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CandidatesSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SameTypeRefine)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SameTypeVerify)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_YaoYao2D)->Arg(81)->Arg(243)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
