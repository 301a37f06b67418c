#include "mqo/experiments.hpp"

#include <stdexcept>

#include "mqo/localsearch.hpp"

namespace mqo {

namespace {

EscapeRun run_from(const Graph& g, const ObjectiveSpec& spec, RelaxedState init,
                   double alpha, int max_iters) {
  if (problem_of(spec) != Problem::MaxCut)
    throw std::invalid_argument("escape runs are MaxCut experiments");
  EscapeRun result;
  result.init_cut = extract_solution(Problem::MaxCut, g, init).score;

  OptimizerConfig cfg;
  cfg.alpha = alpha;
  cfg.beta = 0.0;
  cfg.max_iters = max_iters;
  TrajectoryOutcome out = run_trajectory(spec, g, std::move(init), cfg);
  result.final_cut = extract_solution(Problem::MaxCut, g, out.state).score;
  result.iterations = out.iterations;
  result.stop = out.reason;
  return result;
}

}  // namespace

EscapeRun stationary_escape_run(const Graph& g, const ObjectiveSpec& spec, double c,
                                double alpha, int max_iters) {
  RelaxedState init{std::vector<double>(g.n(), c), BoxDomain::Symmetric};
  return run_from(g, spec, std::move(init), alpha, max_iters);
}

EscapeRun repairable_escape_run(const Graph& g, const ObjectiveSpec& spec,
                                std::span<const uint8_t> side, double alpha,
                                int max_iters) {
  RelaxedState init;
  init.domain = BoxDomain::Symmetric;
  init.x.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) init.x[v] = side[v] ? 1.0 : -1.0;
  return run_from(g, spec, std::move(init), alpha, max_iters);
}

std::vector<uint8_t> random_one_flip_repairable_state(const Graph& g, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<uint8_t> side(g.n());
    for (auto& s : side) s = rng.next_u64() & 1u;
    Solution sol;
    sol.body = CutPartition{side};
    sol.score = cut_value(g, side);
    if (detect_repairable(g, sol, RepairKind::OneFlip)) return side;
  }
  throw std::runtime_error("no 1-flip repairable state found (degenerate graph?)");
}

}  // namespace mqo
