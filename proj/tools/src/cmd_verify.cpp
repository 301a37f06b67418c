#include <cmath>
#include <iostream>

#include "cli_common.hpp"
#include "mqo/experiments.hpp"
#include "mqo/localsearch.hpp"
#include "mqo/oracle.hpp"

namespace mqo::cli {

namespace {

struct SuiteState {
  int failures = 0;

  void check(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

Graph census_graph(Vertex n, double p, uint64_t seed) {
  return generate({ErSpec{n, p}, seed});
}

void suite_fixed_points(SuiteState& state, int max_n, uint64_t seed) {
  const Vertex cap = static_cast<Vertex>(std::min(max_n, 12));
  bool perturbed_ok = true, adjacency_ok = true, bias_ok = true, mis_ok = true;
  int graphs = 0;
  for (int i = 0; i < 10; ++i) {
    const Vertex n = static_cast<Vertex>(6 + (i % (cap - 5)));
    const double p = i % 2 == 0 ? 0.3 : 0.5;
    const Graph g = census_graph(n, p, derive_seed(seed, 100 + i));
    ++graphs;

    for (double lambda : {0.001, 0.1, 1.0}) {
      for (const auto& c : oracle::enumerate_fixed_points(PerturbedLaplacian{lambda}, g))
        if (!c.fixed) perturbed_ok = false;
    }
    for (const auto& c : oracle::enumerate_fixed_points(Adjacency{}, g))
      if (c.one_flip_repairable && c.fixed) adjacency_ok = false;
    for (const auto& c : oracle::enumerate_fixed_points(PerturbedBias{0.001}, g)) {
      if (c.one_flip_repairable && c.fixed) bias_ok = false;
      if (c.fixed && c.one_flip_repairable) bias_ok = false;
    }
    for (const auto& c : oracle::enumerate_fixed_points(MisQubo{2.0}, g))
      if (c.fixed != c.maximal) mis_ok = false;
  }
  const std::string scope = "over " + std::to_string(graphs) + " graphs";
  state.check(perturbed_ok, "fixed-points/perturbed-laplacian-all-binary-fixed", scope);
  state.check(adjacency_ok, "fixed-points/adjacency-repairable-never-fixed", scope);
  state.check(bias_ok, "fixed-points/perturbed-bias-fixed-iff-irreparable", scope);
  state.check(mis_ok, "fixed-points/mis-fixed-iff-maximal", scope);
}

void suite_escapability(SuiteState& state, Vertex n, double p, uint64_t seed) {
  constexpr double kAlpha = 0.1;
  constexpr double kLambda = 0.001;
  constexpr int kIters = 5000;
  constexpr int kGraphs = 10;

  bool laplacian_stuck = true;
  double perturbed_mean = 0.0, bias_mean = 0.0;
  bool flip_stuck = true;
  double flip_gain = 0.0, flip_init_mean = 0.0;

  for (int i = 0; i < kGraphs; ++i) {
    const Graph g = census_graph(n, p, derive_seed(seed, 200 + i));
    Rng rng(derive_seed(seed, 300 + i));
    const double c = rng.uniform(-1.0, 1.0);

    const auto run_l = stationary_escape_run(g, Laplacian{}, c, kAlpha, kIters);
    const auto run_p = stationary_escape_run(g, PerturbedLaplacian{kLambda}, c, kAlpha, kIters);
    const auto run_b = stationary_escape_run(g, PerturbedBias{kLambda}, c, kAlpha, kIters);
    if (run_l.final_cut != 0) laplacian_stuck = false;
    perturbed_mean += static_cast<double>(run_p.final_cut) / kGraphs;
    bias_mean += static_cast<double>(run_b.final_cut) / kGraphs;

    const auto side = random_one_flip_repairable_state(g, rng);
    const auto rep_l = repairable_escape_run(g, Laplacian{}, side, kAlpha, kIters);
    const auto rep_p = repairable_escape_run(g, PerturbedLaplacian{kLambda}, side, kAlpha, kIters);
    const auto rep_b = repairable_escape_run(g, PerturbedBias{kLambda}, side, kAlpha, kIters);
    if (rep_l.final_cut != rep_l.init_cut || rep_p.final_cut != rep_p.init_cut)
      flip_stuck = false;
    flip_gain += static_cast<double>(rep_b.final_cut - rep_b.init_cut) / kGraphs;
    flip_init_mean += static_cast<double>(rep_b.init_cut) / kGraphs;
  }

  std::cout << "escapability on er(n=" << n << ", p=" << p << "), " << kGraphs
            << " graphs\n"
            << "  stationary init:  laplacian stuck=" << (laplacian_stuck ? "yes" : "no")
            << "  perturbed-laplacian mean final=" << perturbed_mean
            << "  perturbed-bias mean final=" << bias_mean << "\n"
            << "  repairable init (mean " << flip_init_mean
            << "): laplacian/perturbed stuck=" << (flip_stuck ? "yes" : "no")
            << "  perturbed-bias mean gain=" << flip_gain << "\n";

  state.check(laplacian_stuck, "escapability/laplacian-stationary-stuck", "final cut 0");
  state.check(perturbed_mean > 0.0, "escapability/perturbed-laplacian-escapes",
              "mean final " + std::to_string(perturbed_mean));
  state.check(bias_mean > 0.0, "escapability/perturbed-bias-escapes",
              "mean final " + std::to_string(bias_mean));
  state.check(flip_stuck, "escapability/laplacian-perturbed-flip-stuck", "");
  state.check(flip_gain > 0.0, "escapability/perturbed-bias-flip-gain",
              "mean gain " + std::to_string(flip_gain));
}

void suite_exact(SuiteState& state, int max_n, uint64_t seed) {
  const Vertex hi = static_cast<Vertex>(std::min(max_n, 14));
  constexpr int kInstances = 30;
  int mis_match = 0, cut_match = 0;
  bool never_exceed = true;
  for (int i = 0; i < kInstances; ++i) {
    const Vertex n = static_cast<Vertex>(8 + (i % (hi - 7)));
    const double p = i % 2 == 0 ? 0.3 : 0.5;
    const Graph g = census_graph(n, p, derive_seed(seed, 400 + i));
    const auto exact_is = oracle::exact_mis(g);
    const auto exact_cut = oracle::exact_maxcut(g);

    SolveOptions opt;
    opt.problem = "mis";
    opt.budget_secs = 3.0;
    opt.seed = derive_seed(seed, 500 + i);
    opt.stop_at_score = exact_is.optimum;
    SolverConfig cfg = build_config(opt, g);
    const RunReport mis = solve_pooled(g, cfg);
    if (mis.best.score > exact_is.optimum) never_exceed = false;
    if (mis.best.score == exact_is.optimum) ++mis_match;

    opt.problem = "maxcut";
    opt.stop_at_score = exact_cut.optimum;
    SolverConfig cut_cfg = build_config(opt, g);
    const RunReport cut = solve_pooled(g, cut_cfg);
    if (cut.best.score > exact_cut.optimum) never_exceed = false;
    if (cut.best.score == exact_cut.optimum) ++cut_match;
  }
  state.check(never_exceed, "exact/never-exceeds-optimum", "");
  state.check(mis_match * 100 >= kInstances * 95, "exact/mis-agreement",
              std::to_string(mis_match) + "/" + std::to_string(kInstances));
  state.check(cut_match * 100 >= kInstances * 95, "exact/maxcut-agreement",
              std::to_string(cut_match) + "/" + std::to_string(kInstances));
}

void suite_toy_reset(SuiteState& state, uint64_t seed) {
  Rng rng(derive_seed(seed, 600));
  const ToyResetResult r = toy_reset_experiment(16, 0.05, 200, rng);
  state.check(r.reset_successes * 100 >= r.trials * 95, "toy-reset/coordinate-reset",
              std::to_string(r.reset_successes) + "/" + std::to_string(r.trials) +
                  " within " + std::to_string(r.attempt_budget) + " attempts");
  state.check(r.restart_successes * 2 < r.trials, "toy-reset/full-restart-below-half",
              std::to_string(r.restart_successes) + "/" + std::to_string(r.trials));
}

}  // namespace

int cmd_verify(const std::string& suite, int max_n, Vertex n, double p, uint64_t seed) {
  SuiteState state;
  const bool all = suite == "all";
  if (!all && suite != "fixed-points" && suite != "escapability" && suite != "exact" &&
      suite != "toy-reset")
    throw UsageError("unknown --suite '" + suite + "'");

  if (all || suite == "fixed-points") suite_fixed_points(state, max_n, seed);
  if (all || suite == "escapability") suite_escapability(state, n, p, seed);
  if (all || suite == "exact") suite_exact(state, max_n, seed);
  if (all || suite == "toy-reset") suite_toy_reset(state, seed);

  if (state.failures > 0) {
    std::cout << state.failures << " check(s) failed\n";
    return kExitSuiteFailure;
  }
  std::cout << "all checks passed\n";
  return kExitOk;
}

}  // namespace mqo::cli
