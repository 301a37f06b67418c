#pragma once

#include <optional>
#include <string>

#include "mqo/pga.hpp"
#include "mqo/rng.hpp"

namespace mqo {

// Multi-trajectory pool shape. batch = keep = 1 is the sequential solver.
struct PoolConfig {
  int batch = 1;  // B: trajectories advanced per phase
  int keep = 1;   // K: retained best solutions
};

struct SolverConfig {
  ObjectiveSpec objective = MisQubo{};
  OptimizerConfig optimizer;
  double reset_fraction = 0.5;  // rho, fraction of coordinates zeroed
  int reset_rounds = 60;        // T_gs, reset rounds per outer loop
  double init_noise = 0.15;     // sigma of the init perturbation
  double time_budget_secs = 10.0;
  uint64_t seed = 1;
  bool local_search = true;
  PoolConfig pool;
  // Replace the degree-based init with the constant vector c * 1
  // (stationary-point studies).
  std::optional<double> init_constant;
  // Early exit once the best score reaches this bound (e.g. a known
  // optimum); the budget remains the hard cap.
  std::optional<int64_t> stop_at_score;
  // Pin the number of outer loops so a run's shape does not depend on
  // wall-clock timing (reproducibility harnesses).
  std::optional<int> max_outer_loops;
};

void validate(const SolverConfig& cfg);

// Cumulative best score at the end of each phase of the outer loop
// (gradient trajectories, global-reset rounds, discrete local search).
struct PhaseGains {
  int64_t after_gradient = 0;
  int64_t after_reset_loop = 0;
  int64_t after_local_search = 0;
};

struct RunReport {
  Solution best;
  bool found_solution = false;  // false: budget died before any result
  PhaseGains phases;
  int outer_loops = 0;
  int trajectories = 0;
  int64_t resets_accepted = 0;
  int64_t resets_rejected = 0;
  int64_t total_iterations = 0;
  StopReason last_trajectory_stop = StopReason::IterCap;
  double elapsed_secs = 0.0;
  std::vector<std::string> warnings;
  SolverConfig config;  // echo
};

// Degree-based initialization, x = Pi(d_base + eps), eps ~ N(0, sigma^2):
//   MIS    d_base_v = 1 - d(v)/max_degree        on [0,1]^n
//   MaxCut d_base_v = 2(1 - d(v)/max_degree) - 1 on [-1,1]^n
// Requires max_degree >= 1 (strip isolated vertices upstream).
RelaxedState init_state(Problem problem, const Graph& g, double sigma, Rng& rng);

// Zeroes a uniformly random floor(rho * n) subset of coordinates in
// place; returns the chosen vertices (sorted).
std::vector<Vertex> global_reset(RelaxedState& state, double rho, Rng& rng);

// mQO solvers. Fresh trajectory, T_gs conditional-reset rounds rebuilt
// from the best solution, then discrete local search, repeated while the
// budget permits. solve_pooled runs pool.batch trajectories per phase
// against a shared top-K pool; with batch = keep = 1 it is byte-identical
// to the sequential solvers (same seed stream).
RunReport solve_mis(const Graph& g, const SolverConfig& cfg);
RunReport solve_maxcut(const Graph& g, const SolverConfig& cfg);
RunReport solve_pooled(const Graph& g, const SolverConfig& cfg);

// --- separable double-well reset study ----------------------------------

struct ToyResetResult {
  int n = 0;
  double delta = 0.0;
  int trials = 0;
  int attempt_budget = 0;  // ceil(2 n ln(n / delta))
  int reset_successes = 0;
  int restart_successes = 0;
};

// Compares single-coordinate conditional resets against full uniform
// restarts on F(x) = sum phi(x_i), phi a tilted double well with basins
// at -1 and +1 and phi(1) < phi(-1). Success = reaching the all-ones
// minimizer within the attempt budget.
ToyResetResult toy_reset_experiment(int n, double delta, int trials, Rng& rng);

}  // namespace mqo
