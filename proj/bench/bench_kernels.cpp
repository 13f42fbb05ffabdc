// Serial reference kernels against their OpenMP versions, plus end-to-end
// lambda by power iteration on the factored zig-zag operator.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "xforge/experiment.hpp"
#include "xforge/kernels.hpp"
#include "xforge/linear_operator.hpp"
#include "xforge/randgen.hpp"
#include "xforge/rng.hpp"
#include "xforge/spectral.hpp"

namespace {

using namespace xforge;

LabelledDigraph make_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  SeededRng rng(seed, 0);
  return random_labelling(config_model(n, m, rng), m, rng);
}

std::vector<double> make_vector(std::size_t n) {
  SeededRng rng(7, 0);
  std::vector<double> x(n);
  for (double& v : x) v = rng.next_double();
  return x;
}

// Args: vertices, degree.
void BM_RotationSerial(benchmark::State& state) {
  const auto g = make_graph(static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(1)), 1);
  const auto x = make_vector(g.n_vertices());
  std::vector<double> y(g.n_vertices());
  for (auto _ : state) {
    kernels::serial::rotation_apply(g.codes(), g.degree(), x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.n_ports()));
}

void BM_RotationOmp(benchmark::State& state) {
  const auto g = make_graph(static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(1)), 1);
  const auto inv = g.inverse_codes();
  const auto x = make_vector(g.n_vertices());
  std::vector<double> y(g.n_vertices());
  for (auto _ : state) {
    kernels::omp::rotation_apply(inv, g.degree(), x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.n_ports()));
  state.counters["threads"] = omp_get_max_threads();
}

// Args: blocks, block size, degree.
void BM_LiftedSerial(benchmark::State& state) {
  const auto h = make_graph(static_cast<std::size_t>(state.range(1)),
                            static_cast<std::size_t>(state.range(2)), 2);
  const auto blocks = static_cast<std::size_t>(state.range(0));
  const auto x = make_vector(blocks * h.n_vertices());
  std::vector<double> y(x.size());
  for (auto _ : state) {
    kernels::serial::lifted_apply(h.codes(), h.degree(), blocks, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(blocks * h.n_ports()));
}

void BM_LiftedOmp(benchmark::State& state) {
  const auto h = make_graph(static_cast<std::size_t>(state.range(1)),
                            static_cast<std::size_t>(state.range(2)), 2);
  const auto blocks = static_cast<std::size_t>(state.range(0));
  const auto x = make_vector(blocks * h.n_vertices());
  std::vector<double> y(x.size());
  for (auto _ : state) {
    kernels::omp::lifted_apply(h.codes(), h.degree(), blocks, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(blocks * h.n_ports()));
  state.counters["threads"] = omp_get_max_threads();
}

// Args: n, m, d of G z (H,H).
void BM_ZigzagLambdaPowerIteration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto d = static_cast<std::size_t>(state.range(2));
  const auto g = make_graph(n, m, 3);
  const auto h = make_graph(m, d, 4);
  SpectralConfig cfg;
  cfg.dense_cutoff = 0;
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_expansion(g, h, cfg));
}

void BM_ZigzagLambdaDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto d = static_cast<std::size_t>(state.range(2));
  const auto g = make_graph(n, m, 3);
  const auto h = make_graph(m, d, 4);
  SpectralConfig cfg;
  cfg.dense_cutoff = n * m;
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_expansion(g, h, cfg));
}

BENCHMARK(BM_RotationSerial)->Args({1 << 12, 8})->Args({1 << 16, 8})->Args({1 << 18, 16});
BENCHMARK(BM_RotationOmp)->Args({1 << 12, 8})->Args({1 << 16, 8})->Args({1 << 18, 16});
BENCHMARK(BM_LiftedSerial)->Args({50, 40, 30})->Args({1000, 40, 30})->Args({4000, 64, 8});
BENCHMARK(BM_LiftedOmp)->Args({50, 40, 30})->Args({1000, 40, 30})->Args({4000, 64, 8});
BENCHMARK(BM_ZigzagLambdaPowerIteration)->Args({10, 5, 3})->Args({30, 20, 10})->Args({50, 40, 30})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZigzagLambdaDense)->Args({10, 5, 3})->Args({30, 20, 10})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
