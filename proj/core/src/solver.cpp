#include "mqo/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mqo/localsearch.hpp"

namespace mqo {

void validate(const SolverConfig& cfg) {
  validate(cfg.objective);
  validate(cfg.optimizer);
  if (cfg.reset_fraction < 0.0 || cfg.reset_fraction >= 1.0)
    throw std::invalid_argument("solver: reset_fraction must be in [0, 1)");
  if (cfg.reset_rounds < 0) throw std::invalid_argument("solver: reset_rounds must be >= 0");
  if (cfg.init_noise < 0.0) throw std::invalid_argument("solver: init_noise must be >= 0");
  if (!(cfg.time_budget_secs > 0.0))
    throw std::invalid_argument("solver: time_budget_secs must be > 0");
  if (cfg.pool.batch < 1 || cfg.pool.keep < 1)
    throw std::invalid_argument("solver: pool batch and keep must be >= 1");
  if (cfg.max_outer_loops && *cfg.max_outer_loops < 1)
    throw std::invalid_argument("solver: max_outer_loops must be >= 1");
}

RelaxedState init_state(Problem problem, const Graph& g, double sigma, Rng& rng) {
  if (g.n() == 0) throw std::invalid_argument("init_state: empty graph");
  if (g.max_degree() < 1)
    throw std::invalid_argument("init_state: edgeless graph (strip isolated vertices upstream)");
  const double dmax = g.max_degree();
  RelaxedState state;
  state.domain = problem == Problem::Mis ? BoxDomain::Unit : BoxDomain::Symmetric;
  state.x.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const double ratio = 1.0 - static_cast<double>(g.degree(v)) / dmax;
    double base = problem == Problem::Mis ? ratio : 2.0 * ratio - 1.0;
    if (sigma > 0.0) base += rng.normal(0.0, sigma);
    state.x[v] = base;
  }
  project(state);
  return state;
}

std::vector<Vertex> global_reset(RelaxedState& state, double rho, Rng& rng) {
  if (rho < 0.0 || rho >= 1.0)
    throw std::invalid_argument("global_reset: rho must be in [0, 1)");
  const auto n = static_cast<Vertex>(state.x.size());
  const auto k = static_cast<Vertex>(std::floor(rho * n));
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (Vertex i = 0; i < k; ++i) {
    const auto j = i + static_cast<Vertex>(rng.uniform_index(n - i));
    std::swap(order[i], order[j]);
  }
  std::vector<Vertex> chosen(order.begin(), order.begin() + k);
  std::sort(chosen.begin(), chosen.end());
  for (Vertex v : chosen) state.x[v] = 0.0;
  return chosen;
}

namespace {

int thread_cap() {
  if (const char* env = std::getenv("MQO_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Index-parallel task runner; results must be written to per-index slots
// so merging stays deterministic regardless of scheduling.
template <typename Body>
void parallel_for(int count, const Body& body) {
  const int threads = std::min(count, thread_cap());
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::scoped_lock lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

bool body_less(const Solution& a, const Solution& b) {
  if (a.body.index() != b.body.index()) return a.body.index() < b.body.index();
  if (const auto* ia = std::get_if<IndependentSet>(&a.body))
    return ia->members < std::get<IndependentSet>(b.body).members;
  return std::get<CutPartition>(a.body).side < std::get<CutPartition>(b.body).side;
}

bool body_equal(const Solution& a, const Solution& b) {
  return !body_less(a, b) && !body_less(b, a);
}

// Top-K retained solutions: score descending, body ascending for ties,
// deduplicated. Small K, linear operations.
class TopKPool {
 public:
  explicit TopKPool(int k) : k_(k) {}

  void offer(Solution sol) {
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), sol, before);
    if (pos != entries_.end() && pos->score == sol.score && body_equal(*pos, sol)) return;
    entries_.insert(pos, std::move(sol));
    if (static_cast<int>(entries_.size()) > k_) entries_.resize(k_);
  }

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const Solution& at(size_t i) const { return entries_[i]; }
  const Solution& best() const { return entries_.front(); }

 private:
  static bool before(const Solution& a, const Solution& b) {
    if (a.score != b.score) return a.score > b.score;
    return body_less(a, b);
  }

  int k_;
  std::vector<Solution> entries_;
};

RelaxedState encode_solution(Problem problem, const Graph& g, const Solution& sol) {
  RelaxedState state;
  if (problem == Problem::Mis) {
    state.domain = BoxDomain::Unit;
    state.x.assign(g.n(), 0.0);
    for (Vertex v : std::get<IndependentSet>(sol.body).members) state.x[v] = 1.0;
  } else {
    state.domain = BoxDomain::Symmetric;
    state.x.resize(g.n());
    const auto& side = std::get<CutPartition>(sol.body).side;
    for (Vertex v = 0; v < g.n(); ++v) state.x[v] = side[v] ? 1.0 : -1.0;
  }
  return state;
}

// Extracts the discrete solution behind a trajectory endpoint. MIS states
// that decode to a dependent set (possible only on iteration/budget caps)
// are discarded; feasible non-maximal sets are greedily completed so the
// stored best is always a maximal independent set.
std::optional<Solution> harvest(Problem problem, const Graph& g, const RelaxedState& state) {
  Solution sol = extract_solution(problem, g, state);
  if (problem == Problem::Mis) {
    auto& is = std::get<IndependentSet>(sol.body);
    if (!is_independent(g, is.members)) return std::nullopt;
    is.members = greedy_maximalize(g, is.members);
    sol.score = static_cast<int64_t>(is.members.size());
  }
  return sol;
}

Solution trivial_solution(Problem problem, const Graph& g) {
  Solution sol;
  if (problem == Problem::Mis) {
    IndependentSet is;
    is.members.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) is.members[v] = v;
    sol.score = g.n();
    sol.body = std::move(is);
  } else {
    sol.body = CutPartition{std::vector<uint8_t>(g.n(), 0)};
    sol.score = 0;
  }
  return sol;
}

RunReport run_engine(const Graph& g, const SolverConfig& cfg) {
  validate(cfg);
  const Problem problem = problem_of(cfg.objective);
  const auto t0 = std::chrono::steady_clock::now();
  const Deadline deadline =
      t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(cfg.time_budget_secs));

  RunReport report;
  report.config = cfg;
  if (g.n() == 0) throw std::invalid_argument("solver: empty graph");

  // Raw best score produced by each phase kind, for the gain breakdown.
  int64_t best_of_gradient = 0;
  int64_t best_of_resets = 0;
  int64_t best_of_local_search = 0;

  auto finish = [&](bool found, Solution best) {
    report.found_solution = found;
    report.best = std::move(best);
    report.phases.after_gradient = best_of_gradient;
    report.phases.after_reset_loop = std::max(best_of_gradient, best_of_resets);
    report.phases.after_local_search =
        std::max(report.phases.after_reset_loop, best_of_local_search);
    report.elapsed_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  };

  if (g.m() == 0) {
    report.warnings.push_back("graph has no edges; returning the trivial solution");
    Solution sol = trivial_solution(problem, g);
    best_of_gradient = sol.score;
    return finish(true, std::move(sol));
  }

  const int batch = cfg.pool.batch;
  if (cfg.reset_rounds > 0 &&
      static_cast<Vertex>(std::floor(cfg.reset_fraction * g.n())) == 0) {
    report.warnings.push_back("floor(rho * n) = 0: global resets are no-ops");
  }

  std::vector<Rng> streams;
  streams.reserve(batch);
  for (int b = 0; b < batch; ++b) streams.emplace_back(derive_seed(cfg.seed, b + 1));

  TopKPool pool(cfg.pool.keep);
  Solution best;
  bool have_best = false;

  const auto past_deadline = [&] { return std::chrono::steady_clock::now() >= deadline; };
  const auto target_hit = [&] {
    return have_best && cfg.stop_at_score && best.score >= *cfg.stop_at_score;
  };

  std::vector<std::optional<Solution>> results(batch);
  std::vector<int> iters(batch);
  std::vector<StopReason> stops(batch);

  // Merges phase results in batch order.
  const auto merge = [&](bool count_resets) {
    for (int b = 0; b < batch; ++b) {
      report.total_iterations += iters[b];
      report.last_trajectory_stop = stops[b];
      ++report.trajectories;
      if (!results[b]) continue;
      Solution& sol = *results[b];
      if (count_resets) {
        best_of_resets = std::max(best_of_resets, sol.score);
      } else {
        best_of_gradient = std::max(best_of_gradient, sol.score);
      }
      const bool better = !have_best || sol.score > best.score;
      pool.offer(sol);
      if (better) {
        best = std::move(sol);
        have_best = true;
        if (count_resets) ++report.resets_accepted;
      } else if (count_resets) {
        ++report.resets_rejected;
      }
      results[b].reset();
    }
  };

  while (!past_deadline() && !target_hit()) {
    if (cfg.max_outer_loops && report.outer_loops >= *cfg.max_outer_loops) break;

    // Phase 1: fresh trajectories from the degree-based init.
    parallel_for(batch, [&](int b) {
      RelaxedState x;
      if (cfg.init_constant) {
        x.domain = problem == Problem::Mis ? BoxDomain::Unit : BoxDomain::Symmetric;
        x.x.assign(g.n(), *cfg.init_constant);
        project(x);
      } else {
        x = init_state(problem, g, cfg.init_noise, streams[b]);
      }
      TrajectoryOutcome out =
          run_trajectory(cfg.objective, g, std::move(x), cfg.optimizer, deadline);
      iters[b] = out.iterations;
      stops[b] = out.reason;
      results[b] = harvest(problem, g, out.state);
    });
    merge(false);

    // Phase 2: conditional global resets from pool solutions.
    for (int round = 0; round < cfg.reset_rounds; ++round) {
      if (past_deadline() || target_hit() || pool.empty()) break;
      parallel_for(batch, [&](int b) {
        const Solution& base = pool.at(streams[b].uniform_index(pool.size()));
        RelaxedState x = encode_solution(problem, g, base);
        global_reset(x, cfg.reset_fraction, streams[b]);
        TrajectoryOutcome out =
            run_trajectory(cfg.objective, g, std::move(x), cfg.optimizer, deadline);
        iters[b] = out.iterations;
        stops[b] = out.reason;
        results[b] = harvest(problem, g, out.state);
      });
      merge(true);
    }

    // Phase 3: discrete local search over every retained solution.
    if (cfg.local_search && !pool.empty() && !past_deadline() && !target_hit()) {
      const int members = static_cast<int>(pool.size());
      std::vector<Solution> polished(members);
      parallel_for(members, [&](int i) {
        Solution sol = pool.at(i);
        if (problem == Problem::Mis) {
          auto& is = std::get<IndependentSet>(sol.body);
          is.members = one_two_swap(g, is.members);
          sol.score = static_cast<int64_t>(is.members.size());
        } else {
          auto& cut = std::get<CutPartition>(sol.body);
          sol.score += one_two_flip(g, cut.side);
        }
        polished[i] = std::move(sol);
      });
      for (Solution& sol : polished) {
        best_of_local_search = std::max(best_of_local_search, sol.score);
        const bool better = !have_best || sol.score > best.score;
        pool.offer(sol);
        if (better) {
          best = sol;
          have_best = true;
        }
      }
    }

    ++report.outer_loops;
  }

  // The loop may exit right after a reset improved the incumbent; the
  // stored best must still leave local search with nothing to do.
  if (cfg.local_search && have_best) {
    Solution polished = best;
    if (problem == Problem::Mis) {
      auto& is = std::get<IndependentSet>(polished.body);
      is.members = one_two_swap(g, is.members);
      polished.score = static_cast<int64_t>(is.members.size());
    } else {
      auto& cut = std::get<CutPartition>(polished.body);
      polished.score += one_two_flip(g, cut.side);
    }
    best_of_local_search = std::max(best_of_local_search, polished.score);
    pool.offer(polished);
    if (polished.score > best.score) best = std::move(polished);
  }

  if (!have_best) {
    report.warnings.push_back("budget exhausted before the first trajectory finished");
    Solution empty;
    if (problem == Problem::Mis)
      empty.body = IndependentSet{};
    else
      empty.body = CutPartition{std::vector<uint8_t>(g.n(), 0)};
    empty.score = problem == Problem::Mis ? 0 : cut_value(g, std::get<CutPartition>(empty.body).side);
    return finish(false, std::move(empty));
  }
  return finish(true, std::move(best));
}

}  // namespace

RunReport solve_mis(const Graph& g, const SolverConfig& cfg) {
  if (problem_of(cfg.objective) != Problem::Mis)
    throw std::invalid_argument("solve_mis: objective must be the MIS QUBO");
  if (cfg.pool.batch != 1 || cfg.pool.keep != 1)
    throw std::invalid_argument("solve_mis: sequential solver requires batch = keep = 1");
  return run_engine(g, cfg);
}

RunReport solve_maxcut(const Graph& g, const SolverConfig& cfg) {
  if (problem_of(cfg.objective) != Problem::MaxCut)
    throw std::invalid_argument("solve_maxcut: objective must be a MaxCut formulation");
  if (cfg.pool.batch != 1 || cfg.pool.keep != 1)
    throw std::invalid_argument("solve_maxcut: sequential solver requires batch = keep = 1");
  return run_engine(g, cfg);
}

RunReport solve_pooled(const Graph& g, const SolverConfig& cfg) { return run_engine(g, cfg); }

// --- toy reset experiment ------------------------------------------------

namespace {

// Tilted double well: local minima at the box ends, the +1 end strictly
// better, basin boundary just left of zero.
double toy_phi(double t) {
  const double q = t * t - 1.0;
  return q * q + 0.1 * (1.0 - t);
}

double toy_flow(double t) {
  for (int i = 0; i < 400; ++i) {
    const double grad = 4.0 * t * t * t - 4.0 * t - 0.1;
    t = std::clamp(t - 0.05 * grad, -1.0, 1.0);
  }
  return t;
}

}  // namespace

ToyResetResult toy_reset_experiment(int n, double delta, int trials, Rng& rng) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("toy_reset_experiment: n must be in [1, 30]");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("toy_reset_experiment: delta must be in (0, 1)");
  if (trials < 1) throw std::invalid_argument("toy_reset_experiment: trials must be >= 1");

  ToyResetResult result;
  result.n = n;
  result.delta = delta;
  result.trials = trials;
  result.attempt_budget =
      static_cast<int>(std::ceil(2.0 * n * std::log(static_cast<double>(n) / delta)));

  const double left_minimum = toy_flow(-0.9);

  for (int trial = 0; trial < trials; ++trial) {
    // Conditional single-coordinate reset from the all-wrong-basin point.
    std::vector<double> x(n, left_minimum);
    for (int attempt = 0; attempt < result.attempt_budget; ++attempt) {
      const int i = static_cast<int>(rng.uniform_index(n));
      const double t = toy_flow(rng.uniform(-1.0, 1.0));
      if (toy_phi(t) < toy_phi(x[i])) x[i] = t;
    }
    if (std::all_of(x.begin(), x.end(), [](double t) { return t == 1.0; }))
      ++result.reset_successes;

    // Full uniform restart, one fresh point per attempt.
    for (int attempt = 0; attempt < result.attempt_budget; ++attempt) {
      bool all_ones = true;
      for (int i = 0; i < n; ++i)
        if (toy_flow(rng.uniform(-1.0, 1.0)) != 1.0) all_ones = false;
      if (all_ones) {
        ++result.restart_successes;
        break;
      }
    }
  }
  return result;
}

}  // namespace mqo
