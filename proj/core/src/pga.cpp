#include "mqo/pga.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace mqo {

void validate(const OptimizerConfig& cfg) {
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("optimizer: alpha must be > 0");
  if (cfg.beta < 0.0 || cfg.beta >= 1.0)
    throw std::invalid_argument("optimizer: beta must be in [0, 1)");
  if (cfg.max_iters < 1) throw std::invalid_argument("optimizer: max_iters must be >= 1");
  if (cfg.conv_tol < 0.0) throw std::invalid_argument("optimizer: conv_tol must be >= 0");
  if (cfg.check_every < 1)
    throw std::invalid_argument("optimizer: check_every must be >= 1");
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Converged: return "converged";
    case StopReason::CheckerAccepted: return "checker-accepted";
    case StopReason::IterCap: return "iter-cap";
  }
  return "?";
}

namespace {

inline double clamp_to(BoxDomain domain, double t) {
  const double lo = domain == BoxDomain::Unit ? 0.0 : -1.0;
  return std::min(1.0, std::max(lo, t));
}

#ifndef NDEBUG
bool in_box(const RelaxedState& state) {
  const double lo = state.domain == BoxDomain::Unit ? 0.0 : -1.0;
  for (double t : state.x)
    if (t < lo || t > 1.0) return false;
  return true;
}
#endif

}  // namespace

void project(RelaxedState& state) {
  for (double& t : state.x) t = clamp_to(state.domain, t);
}

void step(const ObjectiveSpec& spec, const Graph& g, RelaxedState& state,
          std::vector<double>& velocity, const OptimizerConfig& cfg) {
  velocity.resize(state.x.size(), 0.0);
  std::vector<double> grad(state.x.size());
  gradient(spec, g, state, grad);
  for (size_t i = 0; i < state.x.size(); ++i) {
    velocity[i] = cfg.beta * velocity[i] + grad[i];
    state.x[i] = clamp_to(state.domain, state.x[i] + cfg.alpha * velocity[i]);
  }
  assert(in_box(state));
}

TrajectoryOutcome run_trajectory(const ObjectiveSpec& spec, const Graph& g,
                                 RelaxedState init, const OptimizerConfig& cfg,
                                 std::optional<Deadline> deadline) {
  validate(cfg);
  const Problem problem = problem_of(spec);
  const Vertex n = g.n();
  const double gamma = problem == Problem::Mis ? std::get<MisQubo>(spec).gamma : 0.0;

  TrajectoryOutcome out;
  out.state = std::move(init);
  project(out.state);

  std::vector<double> velocity(n, 0.0);
  std::vector<double> grad(n);
  std::vector<double> binarized(n);

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    gradient(spec, g, out.state, grad);
    double max_change = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      velocity[v] = cfg.beta * velocity[v] + grad[v];
      const double next = clamp_to(out.state.domain, out.state.x[v] + cfg.alpha * velocity[v]);
      max_change = std::max(max_change, std::abs(next - out.state.x[v]));
      out.state.x[v] = next;
    }
    assert(in_box(out.state));
    out.iterations = iter;

    if (problem == Problem::Mis) {
      if (iter % cfg.check_every == 0) {
        for (Vertex v = 0; v < n; ++v) binarized[v] = out.state.x[v] > 0.5 ? 1.0 : 0.0;
        if (mis_fixed_point_check(g, binarized, gamma, cfg.alpha)) {
          out.reason = StopReason::CheckerAccepted;
          return out;
        }
      }
    } else if (max_change <= cfg.conv_tol) {
      out.reason = StopReason::Converged;
      return out;
    }

    if (deadline && (iter & 255) == 0 &&
        std::chrono::steady_clock::now() >= *deadline) {
      break;
    }
  }
  out.reason = StopReason::IterCap;
  return out;
}

bool mis_fixed_point_check(const Graph& g, std::span<const double> x, double gamma,
                           double alpha) {
  if (static_cast<Vertex>(x.size()) != g.n())
    throw std::invalid_argument("mis_fixed_point_check: dimension mismatch");
  if (!(gamma > 1.0)) throw std::invalid_argument("mis_fixed_point_check: gamma must be > 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("mis_fixed_point_check: alpha must be > 0");
  for (double t : x)
    if (t != 0.0 && t != 1.0)
      throw std::invalid_argument("mis_fixed_point_check: state not binary");

  // With x binary, (Ax)_v counts selected neighbors. The point is fixed
  // iff selected vertices have none and unselected vertices have >= 1.
  std::vector<double> selected_neighbors(g.n());
  g.adjacency_apply(x, selected_neighbors);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (x[v] == 1.0) {
      if (selected_neighbors[v] > 0.0) return false;  // independence violated
    } else {
      if (selected_neighbors[v] < 1.0) return false;  // v could be added
    }
  }
  return true;
}

bool maxcut_binary_fixed_point_check(const ObjectiveSpec& spec, const Graph& g,
                                     std::span<const double> x) {
  if (problem_of(spec) != Problem::MaxCut)
    throw std::invalid_argument("maxcut_binary_fixed_point_check: MaxCut objectives only");
  if (static_cast<Vertex>(x.size()) != g.n())
    throw std::invalid_argument("maxcut_binary_fixed_point_check: dimension mismatch");
  for (double t : x)
    if (t != 1.0 && t != -1.0)
      throw std::invalid_argument("maxcut_binary_fixed_point_check: state not in {-1,1}^n");

  RelaxedState state{std::vector<double>(x.begin(), x.end()), BoxDomain::Symmetric};
  const std::vector<double> grad = gradient(spec, g, state);
  for (Vertex v = 0; v < g.n(); ++v)
    if (x[v] * grad[v] < 0.0) return false;
  return true;
}

}  // namespace mqo
