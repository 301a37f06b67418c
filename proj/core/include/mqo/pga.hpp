#pragma once

#include <chrono>
#include <optional>
#include <span>

#include "mqo/objectives.hpp"

namespace mqo {

// Projected gradient ascent: x <- Pi(x + alpha * v), v <- beta * v + grad.
// beta = 0 recovers plain gradient ascent.
struct OptimizerConfig {
  double alpha = 0.8;     // step size, > 0
  double beta = 0.0;      // heavy-ball momentum, in [0, 1)
  int max_iters = 5000;   // per trajectory
  double conv_tol = 1e-6; // max-norm state-change threshold (MaxCut stop)
  int check_every = 1;    // iterations between MIS fixed-point checks
};

void validate(const OptimizerConfig& cfg);

enum class StopReason { Converged, CheckerAccepted, IterCap };
const char* stop_reason_name(StopReason r);

struct TrajectoryOutcome {
  RelaxedState state;
  int iterations = 0;
  StopReason reason = StopReason::IterCap;
};

// Coordinatewise clamp onto the state's box. Idempotent.
void project(RelaxedState& state);

// One ascent step in place. With alpha = 0 the state is unchanged.
void step(const ObjectiveSpec& spec, const Graph& g, RelaxedState& state,
          std::vector<double>& velocity, const OptimizerConfig& cfg);

using Deadline = std::chrono::steady_clock::time_point;

// Runs PGA from `init` until the problem's stop rule fires or max_iters.
//   MIS:    every check_every iterations, binarize at 0.5 and accept when
//           the binary point is a fixed point of h (maximal IS).
//   MaxCut: stop when ||x_{t+1} - x_t||_inf <= conv_tol.
// Hitting max_iters (or the optional deadline, polled every 256 steps) is
// a valid IterCap outcome, not an error. Deterministic given inputs.
TrajectoryOutcome run_trajectory(const ObjectiveSpec& spec, const Graph& g,
                                 RelaxedState init, const OptimizerConfig& cfg,
                                 std::optional<Deadline> deadline = {});

// Fixed-point test for a binary {0,1} state x against the MIS objective:
// true iff x = Pi(x + alpha grad h(x)), i.e. every selected vertex has no
// selected neighbor and every unselected vertex has at least one (gamma > 1).
// One adjacency action, no per-vertex candidate scans. Throws on
// non-binary input.
bool mis_fixed_point_check(const Graph& g, std::span<const double> x, double gamma,
                           double alpha);

// Binary {-1,1} fixed-point test: true iff x_i * grad_i f(x) >= 0 for all i.
// Throws on non-binary input.
bool maxcut_binary_fixed_point_check(const ObjectiveSpec& spec, const Graph& g,
                                     std::span<const double> x);

}  // namespace mqo
