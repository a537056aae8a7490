#include <benchmark/benchmark.h>

#include <cstdint>

#include "stochtop/betti.hpp"
#include "stochtop/collapse.hpp"
#include "stochtop/rank.hpp"
#include "stochtop/sampler.hpp"
#include "stochtop/spectra.hpp"
#include "stochtop/traversal.hpp"

namespace {

using namespace stochtop;

/// Linial-Meshulam 2-complex with mean vertex-triangle degree c.
SimplicialComplex lm2(std::size_t n, double c, std::uint64_t seed) {
  return lm_sample(n, 2, c / static_cast<double>(n), seed);
}

void BM_LmSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lm2(n, 2.0, seed++).f(2));
}
BENCHMARK(BM_LmSample)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_CliqueSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double p = 2.0 / static_cast<double>(n);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(clique_sample(n, 1, p, 3, seed++).f(2));
}
BENCHMARK(BM_CliqueSample)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_CoboundaryRank(benchmark::State& state) {
  const SimplicialComplex x = lm2(static_cast<std::size_t>(state.range(0)), 2.0, 7);
  const SparseIntMatrix d = coboundary_matrix(x, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(d, kPrimaryPrime));
  state.counters["nnz"] = static_cast<double>(d.nnz());
}
BENCHMARK(BM_CoboundaryRank)->Arg(50)->Arg(100)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_BettiNumbers(benchmark::State& state) {
  const SimplicialComplex x = lm2(static_cast<std::size_t>(state.range(0)), 2.0, 11);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(x));
}
BENCHMARK(BM_BettiNumbers)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BfsTraverse(benchmark::State& state) {
  const SimplicialComplex x = lm2(static_cast<std::size_t>(state.range(0)), 2.0, 3);
  const Simplex root{0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(bfs_traverse(x, root, 4).layer.size());
}
BENCHMARK(BM_BfsTraverse)->Arg(100)->Arg(300)->Unit(benchmark::kMicrosecond);

void BM_EmpiricalLocal(benchmark::State& state) {
  const SimplicialComplex x = lm2(static_cast<std::size_t>(state.range(0)), 2.0, 5);
  for (auto _ : state) benchmark::DoNotOptimize(empirical_local_distribution(x, 1, 2).size());
}
BENCHMARK(BM_EmpiricalLocal)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_InertiaCount(benchmark::State& state) {
  const SimplicialComplex x = lm2(static_cast<std::size_t>(state.range(0)), 2.0, 9);
  const Eigen::SparseMatrix<double> l = up_laplacian(x, 1);
  for (auto _ : state) {
    InertiaCounter counter(l);
    benchmark::DoNotOptimize(counter.count_below(1.5));
  }
  state.counters["dim"] = static_cast<double>(l.rows());
}
BENCHMARK(BM_InertiaCount)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_CollapseRounds(benchmark::State& state) {
  const SimplicialComplex x = lm2(static_cast<std::size_t>(state.range(0)), 2.0, 13);
  for (auto _ : state) benchmark::DoNotOptimize(betti_lower_bound(x, 1, 3));
}
BENCHMARK(BM_CollapseRounds)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
