#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "mqo/localsearch.hpp"
#include "mqo/oracle.hpp"
#include "mqo/solver.hpp"
#include "support/test_graphs.hpp"

using namespace mqo;
using namespace mqo::testing;

namespace {

SolverConfig mis_config(uint64_t seed, double budget = 2.0) {
  SolverConfig cfg;
  cfg.objective = MisQubo{2.0};
  cfg.optimizer.alpha = 0.8;
  cfg.optimizer.beta = 0.3;
  cfg.reset_fraction = 0.5;
  cfg.reset_rounds = 20;
  cfg.time_budget_secs = budget;
  cfg.seed = seed;
  return cfg;
}

SolverConfig maxcut_config(uint64_t seed, double budget = 2.0) {
  SolverConfig cfg;
  cfg.objective = PerturbedBias{0.001};
  cfg.optimizer.alpha = 0.0025;
  cfg.optimizer.beta = 0.8;
  cfg.reset_fraction = 0.8;
  cfg.reset_rounds = 20;
  cfg.time_budget_secs = budget;
  cfg.seed = seed;
  return cfg;
}

bool same_report(const RunReport& a, const RunReport& b) {
  return a.best.score == b.best.score && a.best.body == b.best.body &&
         a.outer_loops == b.outer_loops && a.trajectories == b.trajectories &&
         a.resets_accepted == b.resets_accepted &&
         a.resets_rejected == b.resets_rejected &&
         a.total_iterations == b.total_iterations &&
         a.phases.after_gradient == b.phases.after_gradient &&
         a.phases.after_reset_loop == b.phases.after_reset_loop &&
         a.phases.after_local_search == b.phases.after_local_search;
}

}  // namespace

TEST_CASE("init_state") {
  SUBCASE("MIS base is 1 - d/max_degree") {
    const Graph g = star(3);
    Rng rng(1);
    const RelaxedState s = init_state(Problem::Mis, g, 0.0, rng);
    CHECK(s.x[0] == 0.0);  // the hub has the maximum degree
    for (Vertex v = 1; v < 4; ++v) CHECK(s.x[v] == doctest::Approx(1.0 - 1.0 / 3.0));
  }
  SUBCASE("MaxCut base on a regular graph is all -1") {
    const Graph g = cycle(4);
    Rng rng(1);
    const RelaxedState s = init_state(Problem::MaxCut, g, 0.0, rng);
    for (double v : s.x) CHECK(v == -1.0);
  }
  SUBCASE("noisy init is deterministic per seed") {
    const Graph g = er(40, 0.2, 3);
    Rng r1(9), r2(9);
    CHECK(init_state(Problem::Mis, g, 0.15, r1).x == init_state(Problem::Mis, g, 0.15, r2).x);
  }
  SUBCASE("rejects degenerate graphs") {
    Rng rng(1);
    CHECK_THROWS_AS(init_state(Problem::Mis, Graph::from_edges(0, {}), 0.1, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(init_state(Problem::Mis, Graph::from_edges(4, {}), 0.1, rng),
                    std::invalid_argument);
  }
}

TEST_CASE("global_reset") {
  SUBCASE("zeroes exactly floor(rho n) coordinates") {
    RelaxedState s{std::vector<double>(10, 1.0), BoxDomain::Unit};
    Rng rng(5);
    const auto chosen = global_reset(s, 0.5, rng);
    CHECK(chosen.size() == 5);
    int zeroed = 0;
    for (double v : s.x) zeroed += v == 0.0;
    CHECK(zeroed == 5);
  }
  SUBCASE("floor can degenerate to zero") {
    RelaxedState s{std::vector<double>(5, 1.0), BoxDomain::Unit};
    Rng rng(5);
    CHECK(global_reset(s, 0.1, rng).empty());
    CHECK(s.x == std::vector<double>(5, 1.0));
  }
  SUBCASE("an independent-set indicator stays an indicator") {
    // best {0, 2} on C5; zeroing keeps a (possibly non-maximal) IS
    RelaxedState s{{1, 0, 1, 0, 0}, BoxDomain::Unit};
    Rng rng(7);
    global_reset(s, 0.4, rng);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < 5; ++v)
      if (s.x[v] == 1.0) members.push_back(v);
    CHECK(is_independent(cycle(5), members));
  }
  SUBCASE("draws are uniform-ish across coordinates") {
    Rng rng(11);
    std::vector<int> hits(8, 0);
    for (int i = 0; i < 4000; ++i) {
      RelaxedState s{std::vector<double>(8, 1.0), BoxDomain::Unit};
      for (Vertex v : global_reset(s, 0.25, rng)) ++hits[v];
    }
    for (int h : hits) CHECK(std::abs(h - 1000) < 150);  // 2 coords per draw
  }
}

TEST_CASE("solve_mis finds small optima") {
  SUBCASE("C5") {
    const RunReport r = solve_mis(cycle(5), mis_config(3, 1.0));
    CHECK(r.best.score == 2);
    CHECK(r.found_solution);
    CHECK(is_independent(cycle(5), std::get<IndependentSet>(r.best.body).members));
  }
  SUBCASE("Petersen") {
    SolverConfig cfg = mis_config(4, 5.0);
    cfg.stop_at_score = 4;
    const RunReport r = solve_mis(petersen(), cfg);
    CHECK(r.best.score == 4);
  }
  SUBCASE("final best is maximal and swap-irreparable") {
    SolverConfig cfg = mis_config(9, 1.0);
    const Graph g = er(40, 0.15, 303);
    const RunReport r = solve_mis(g, cfg);
    CHECK_FALSE(detect_repairable(g, r.best, RepairKind::OneTwoSwap).has_value());
  }
}

TEST_CASE("solve_maxcut finds small optima") {
  CHECK(solve_maxcut(complete(3), maxcut_config(5, 1.0)).best.score == 2);
  CHECK(solve_maxcut(cycle(5), maxcut_config(6, 1.0)).best.score == 4);
}

TEST_CASE("solver guards") {
  CHECK_THROWS_AS(solve_mis(cycle(5), maxcut_config(1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_maxcut(cycle(5), mis_config(1)), std::invalid_argument);
  SolverConfig bad = mis_config(1);
  bad.reset_fraction = 1.0;
  CHECK_THROWS_AS(solve_mis(cycle(5), bad), std::invalid_argument);
  SolverConfig pooled = mis_config(1);
  pooled.pool = {4, 2};
  CHECK_THROWS_AS(solve_mis(cycle(5), pooled), std::invalid_argument);
  CHECK_THROWS_AS(solve_pooled(Graph::from_edges(0, {}), mis_config(1)),
                  std::invalid_argument);
}

TEST_CASE("edgeless graphs solve trivially") {
  const Graph g = Graph::from_edges(6, {});
  const RunReport mis = solve_mis(g, mis_config(1, 0.5));
  CHECK(mis.best.score == 6);
  const RunReport cut = solve_maxcut(g, maxcut_config(1, 0.5));
  CHECK(cut.best.score == 0);
}

TEST_CASE("reports are internally consistent") {
  const Graph g = er(60, 0.1, 307);
  SolverConfig cfg = mis_config(17, 1.5);
  cfg.reset_rounds = 10;
  const RunReport r = solve_mis(g, cfg);

  CHECK(r.phases.after_gradient <= r.phases.after_reset_loop);
  CHECK(r.phases.after_reset_loop <= r.phases.after_local_search);
  CHECK(r.best.score == r.phases.after_local_search);
  CHECK(r.best.score == score_solution(g, r.best));
  CHECK(r.found_solution);
  CHECK(r.outer_loops >= 1);
  // budget compliance with one trajectory of grace
  CHECK(r.elapsed_secs <= cfg.time_budget_secs + 1.0);
}

TEST_CASE("budget exhaustion before any trajectory yields the empty marker") {
  SolverConfig cfg = mis_config(1);
  cfg.time_budget_secs = 1e-9;
  const RunReport r = solve_mis(er(30, 0.2, 311), cfg);
  CHECK_FALSE(r.found_solution);
  CHECK(r.best.score == 0);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("runs are reproducible from the seed") {
  const Graph g = er(50, 0.15, 313);
  SolverConfig cfg = mis_config(23, 60.0);
  cfg.max_outer_loops = 2;  // budget never binds, loop count pinned
  cfg.reset_rounds = 8;
  const RunReport a = solve_mis(g, cfg);
  const RunReport b = solve_mis(g, cfg);
  CHECK(same_report(a, b));
}

TEST_CASE("pooled solver") {
  SUBCASE("batch = keep = 1 is byte-identical to the sequential solver") {
    const Graph g = er(40, 0.2, 317);
    SolverConfig cfg = mis_config(29, 60.0);
    cfg.max_outer_loops = 2;
    cfg.reset_rounds = 6;
    CHECK(same_report(solve_mis(g, cfg), solve_pooled(g, cfg)));

    SolverConfig mc = maxcut_config(31, 60.0);
    mc.max_outer_loops = 1;
    mc.reset_rounds = 6;
    CHECK(same_report(solve_maxcut(g, mc), solve_pooled(g, mc)));
  }
  SUBCASE("a batch of four solves Petersen") {
    SolverConfig cfg = mis_config(37, 5.0);
    cfg.pool = {4, 4};
    cfg.stop_at_score = 4;
    CHECK(solve_pooled(petersen(), cfg).best.score == 4);
  }
  SUBCASE("results do not depend on the worker-thread count") {
    const Graph g = er(60, 0.15, 337);
    SolverConfig cfg = mis_config(43, 60.0);
    cfg.pool = {4, 4};
    cfg.max_outer_loops = 1;
    cfg.reset_rounds = 4;
    setenv("MQO_THREADS", "1", 1);
    const RunReport serial = solve_pooled(g, cfg);
    setenv("MQO_THREADS", "4", 1);
    const RunReport threaded = solve_pooled(g, cfg);
    unsetenv("MQO_THREADS");
    CHECK(same_report(serial, threaded));
  }
  SUBCASE("a pool dominates the singleton run on the shared stream") {
    const Graph g = er(200, 0.1, 331);
    SolverConfig single = maxcut_config(41, 120.0);
    single.max_outer_loops = 1;
    single.reset_rounds = 10;
    const int64_t alone = solve_pooled(g, single).best.score;

    SolverConfig pooled = single;
    pooled.pool = {8, 4};
    const int64_t batched = solve_pooled(g, pooled).best.score;
    CHECK(batched >= alone);
  }
}

TEST_CASE("toy reset experiment") {
  SUBCASE("n = 1 succeeds almost immediately for both strategies") {
    Rng rng(43);
    const ToyResetResult r = toy_reset_experiment(1, 0.05, 50, rng);
    CHECK(r.attempt_budget == static_cast<int>(std::ceil(2.0 * std::log(1.0 / 0.05))));
    CHECK(r.reset_successes >= 45);
    CHECK(r.restart_successes >= 45);
  }
  SUBCASE("guards") {
    Rng rng(1);
    CHECK_THROWS_AS(toy_reset_experiment(31, 0.05, 10, rng), std::invalid_argument);
    CHECK_THROWS_AS(toy_reset_experiment(8, 0.0, 10, rng), std::invalid_argument);
  }
}
