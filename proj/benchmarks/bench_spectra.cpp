#include <benchmark/benchmark.h>

#include "spectral_entropy/bounds.hpp"
#include "spectral_entropy/entropy.hpp"
#include "spectral_entropy/families.hpp"
#include "spectral_entropy/products.hpp"
#include "spectral_entropy/spectrum.hpp"

namespace se = spectral_entropy;

static void BM_JacobiErdosRenyi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = se::generate(se::FamilySpec::erdos_renyi(n, 0.2, 42));
  const auto m = se::graph_matrix(g, se::MatrixKind::Laplacian);
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::eig_symmetric(m, se::MatrixKind::Laplacian));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiErdosRenyi)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_CoronaRecursion(benchmark::State& state) {
  const auto seed = se::generate("complete:3");
  const auto seed_spectrum = se::numeric_spectrum(seed, se::MatrixKind::Laplacian);
  const auto iterations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        se::corona_graph_spectrum(seed_spectrum, seed.vertex_count(), iterations));
  }
}
BENCHMARK(BM_CoronaRecursion)->DenseRange(1, 6);

static void BM_CoronaEigensolve(benchmark::State& state) {
  const auto seed = se::generate("complete:3");
  const auto g = se::corona_iterate(seed, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::numeric_spectrum(g, se::MatrixKind::Laplacian));
  }
}
BENCHMARK(BM_CoronaEigensolve)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_SharmaMittal(benchmark::State& state) {
  const auto g = se::generate(se::FamilySpec::cycle(static_cast<std::size_t>(state.range(0))));
  const auto ds =
      se::density_spectrum(se::numeric_spectrum(g, se::MatrixKind::Laplacian), g.edge_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::sharma_mittal(ds, 0.5, 2.0));
  }
}
BENCHMARK(BM_SharmaMittal)->Arg(64)->Arg(256);

static void BM_SpanningTreeCount(benchmark::State& state) {
  const auto g = se::generate(se::FamilySpec::complete(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::spanning_tree_count(g));
  }
}
BENCHMARK(BM_SpanningTreeCount)->Arg(10)->Arg(30);

static void BM_CliqueNumber(benchmark::State& state) {
  const auto g = se::generate(se::FamilySpec::erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.5, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::clique_number(g));
  }
}
BENCHMARK(BM_CliqueNumber)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
