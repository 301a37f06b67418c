#include <benchmark/benchmark.h>

#include "mqo/localsearch.hpp"
#include "mqo/pga.hpp"
#include "mqo/solver.hpp"

namespace {

using namespace mqo;

Graph bench_graph(Vertex n, double mean_degree, uint64_t seed) {
  return generate({ErSpec{n, mean_degree / n}, seed});
}

void BM_adjacency_apply(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<Vertex>(state.range(0)), 16.0, 1);
  std::vector<double> x(g.n(), 0.5), y(g.n());
  for (auto _ : state) {
    g.adjacency_apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(BM_adjacency_apply)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_laplacian_apply(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<Vertex>(state.range(0)), 16.0, 1);
  std::vector<double> x(g.n(), 0.5), y(g.n());
  for (auto _ : state) {
    g.laplacian_apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(BM_laplacian_apply)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_gradient_perturbed_bias(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<Vertex>(state.range(0)), 16.0, 1);
  RelaxedState s{std::vector<double>(g.n(), -0.25), BoxDomain::Symmetric};
  std::vector<double> grad(g.n());
  const ObjectiveSpec spec = PerturbedBias{0.001};
  for (auto _ : state) {
    gradient(spec, g, s, grad);
    benchmark::DoNotOptimize(grad.data());
  }
}
BENCHMARK(BM_gradient_perturbed_bias)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_mis_trajectory(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<Vertex>(state.range(0)), 32.0, 2);
  OptimizerConfig cfg;
  cfg.alpha = 0.8;
  cfg.beta = 0.3;
  Rng rng(7);
  for (auto _ : state) {
    state.PauseTiming();
    Rng fresh(rng.next_u64());
    RelaxedState init = init_state(Problem::Mis, g, 0.15, fresh);
    state.ResumeTiming();
    auto out = run_trajectory(MisQubo{2.0}, g, std::move(init), cfg);
    benchmark::DoNotOptimize(out.iterations);
  }
}
BENCHMARK(BM_mis_trajectory)->Arg(1 << 10)->Arg(1 << 12);

void BM_one_flip_pass(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<Vertex>(state.range(0)), 16.0, 3);
  Rng rng(11);
  for (auto _ : state) {
    state.PauseTiming();
    std::vector<uint8_t> side(g.n());
    for (auto& s : side) s = rng.next_u64() & 1;
    state.ResumeTiming();
    benchmark::DoNotOptimize(one_flip_pass(g, side));
  }
}
BENCHMARK(BM_one_flip_pass)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_one_two_swap(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<Vertex>(state.range(0)), 8.0, 5);
  for (auto _ : state) {
    state.PauseTiming();
    auto members = greedy_maximalize(g, {});
    state.ResumeTiming();
    benchmark::DoNotOptimize(one_two_swap(g, std::move(members)));
  }
}
BENCHMARK(BM_one_two_swap)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

}  // namespace

BENCHMARK_MAIN();
