#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mqo/experiments.hpp"
#include "mqo/localsearch.hpp"
#include "mqo/oracle.hpp"
#include "mqo/solver.hpp"
#include "support/test_graphs.hpp"

using namespace mqo;
using namespace mqo::testing;

namespace {

constexpr uint64_t kSeed = 20250801;

// The escapability instances: the reference experiments use n = 100 with
// a mean degree around 1.66 (initial repairable cuts sit near m/2 ~ 42),
// which pins m ~ 83; the per-pair probability follows as d / n.
constexpr Vertex kEscapeN = 100;
constexpr double kEscapeP = 1.66 / 100.0;

void line(int criterion, const std::string& name, bool pass, const std::string& detail) {
  const std::string label =
      criterion > 0 ? "criterion " + std::to_string(criterion) : std::string("extra");
  std::printf("[%s] %s: %s — %s\n", pass ? "PASS" : "FAIL", label.c_str(), name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(pass, label, " (", name, "): ", detail);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

SolverConfig mis_preset(double budget, uint64_t seed) {
  SolverConfig cfg;
  cfg.objective = MisQubo{2.0};
  cfg.optimizer.alpha = 0.8;
  cfg.optimizer.beta = 0.3;
  cfg.reset_fraction = 0.5;
  cfg.reset_rounds = 60;
  cfg.init_noise = 0.15;
  cfg.time_budget_secs = budget;
  cfg.seed = seed;
  return cfg;
}

SolverConfig maxcut_preset(double budget, uint64_t seed) {
  SolverConfig cfg;
  cfg.objective = PerturbedBias{0.001};
  cfg.optimizer.alpha = 0.0025;
  cfg.optimizer.beta = 0.8;
  cfg.reset_fraction = 0.8;
  cfg.reset_rounds = 90;
  cfg.init_noise = 0.15;
  cfg.time_budget_secs = budget;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("criterion 1: exactness at small scale") {
  int mis_hits = 0;
  int cut_hits = 0;
  bool never_exceed = true;
  constexpr int kInstances = 100;
  for (int i = 0; i < kInstances; ++i) {
    const Vertex n = static_cast<Vertex>(8 + i % 7);
    const double p = (i / 7) % 2 == 0 ? 0.3 : 0.5;
    const Graph g = er(n, p, derive_seed(kSeed, 1000 + i));
    const auto exact_is = oracle::exact_mis(g);
    const auto exact_cut = oracle::exact_maxcut(g);

    SolverConfig mis_cfg = mis_preset(5.0, derive_seed(kSeed, 2000 + i));
    mis_cfg.stop_at_score = exact_is.optimum;
    const RunReport mis = solve_mis(g, mis_cfg);
    if (mis.best.score > exact_is.optimum) never_exceed = false;
    if (mis.best.score == exact_is.optimum) ++mis_hits;

    SolverConfig cut_cfg = maxcut_preset(5.0, derive_seed(kSeed, 3000 + i));
    cut_cfg.stop_at_score = exact_cut.optimum;
    const RunReport cut = solve_maxcut(g, cut_cfg);
    if (cut.best.score > exact_cut.optimum) never_exceed = false;
    if (cut.best.score == exact_cut.optimum) ++cut_hits;
  }
  line(1, "solver never exceeds the exact optimum", never_exceed, "hard bound");
  line(1, "MIS matches exact on >= 95/100",
       mis_hits >= 95, std::to_string(mis_hits) + "/100");
  line(1, "MaxCut matches exact on >= 95/100",
       cut_hits >= 95, std::to_string(cut_hits) + "/100");
}

TEST_CASE("criterion 2: all binary states are fixed under the perturbed Laplacian") {
  Rng rng(derive_seed(kSeed, 20));
  int states = 0;
  bool all_fixed = true;
  for (int gi = 0; gi < 20; ++gi) {
    const Vertex n = static_cast<Vertex>(16 + 3 * gi);  // 16 .. 73 capped below
    const Graph g = er(std::min<Vertex>(n, 64), rng.uniform(0.1, 0.6),
                       derive_seed(kSeed, 2100 + gi));
    for (int s = 0; s < 50; ++s) {
      std::vector<double> x(g.n());
      for (auto& v : x) v = rng.next_u64() & 1 ? 1.0 : -1.0;
      for (const double lambda : {0.001, 0.1, 1.0}) {
        if (!maxcut_binary_fixed_point_check(PerturbedLaplacian{lambda}, g, x))
          all_fixed = false;
      }
      ++states;
    }
  }
  line(2, "1000 random binary states, lambda in {0.001, 0.1, 1}", all_fixed,
       std::to_string(states) + " states, zero tolerance");
}

TEST_CASE("criterion 3: repairable states escape the adjacency and bias formulations") {
  bool repairable_never_fixed = true;
  bool bias_fixed_irreparable = true;
  bool checker_matches_census = true;
  int64_t states = 0;
  for (int gi = 0; gi < 20; ++gi) {
    const Vertex n = static_cast<Vertex>(6 + gi % 5);  // 6 .. 10
    const Graph g = er(n, gi % 2 ? 0.5 : 0.35, derive_seed(kSeed, 2200 + gi));
    for (const ObjectiveSpec spec :
         {ObjectiveSpec{Adjacency{}}, ObjectiveSpec{PerturbedBias{0.001}}}) {
      for (const auto& c : oracle::enumerate_fixed_points(spec, g)) {
        ++states;
        if (c.one_flip_repairable && c.fixed) repairable_never_fixed = false;
        if (std::holds_alternative<PerturbedBias>(spec) && c.fixed &&
            c.one_flip_repairable)
          bias_fixed_irreparable = false;
        std::vector<double> x(g.n());
        for (Vertex v = 0; v < g.n(); ++v) x[v] = (c.mask >> v) & 1u ? 1.0 : -1.0;
        if (maxcut_binary_fixed_point_check(spec, g, x) != c.fixed)
          checker_matches_census = false;
      }
    }
  }
  line(3, "1-flip repairable => not fixed (f_A, f_B)", repairable_never_fixed,
       std::to_string(states) + " states exhaustively");
  line(3, "f_B fixed => 1-flip irreparable", bias_fixed_irreparable, "zero tolerance");
  line(3, "implementation checker agrees with the dense census", checker_matches_census,
       "every state");
}

TEST_CASE("criterion 4: maximal independent sets are fixed points of the MIS objective") {
  bool all_fixed = true;
  int64_t maximal_count = 0;
  int64_t swap_repairable_count = 0;
  for (int gi = 0; gi < 20; ++gi) {
    const Vertex n = static_cast<Vertex>(8 + gi % 5);  // 8 .. 12
    const Graph g = er(n, gi % 2 ? 0.45 : 0.25, derive_seed(kSeed, 2300 + gi));
    for (const auto& c : oracle::enumerate_fixed_points(MisQubo{2.0}, g)) {
      if (!c.maximal) continue;
      ++maximal_count;
      std::vector<double> x(g.n());
      std::vector<Vertex> members;
      for (Vertex v = 0; v < g.n(); ++v) {
        if ((c.mask >> v) & 1u) {
          x[v] = 1.0;
          members.push_back(v);
        }
      }
      if (!mis_fixed_point_check(g, x, 2.0, 0.8)) all_fixed = false;
      Solution sol;
      sol.body = IndependentSet{std::move(members)};
      sol.score = std::popcount(c.mask);
      if (detect_repairable(g, sol, RepairKind::OneTwoSwap)) ++swap_repairable_count;
    }
  }
  line(4, "every maximal IS is a PGA fixed point", all_fixed,
       std::to_string(maximal_count) + " maximal sets, " +
           std::to_string(swap_repairable_count) + " of them (1,2)-swap repairable");
  line(4, "swap-repairable sets were exercised", swap_repairable_count > 0,
       std::to_string(swap_repairable_count) + " witnesses");
}

// Note on the perturbed-Laplacian leg: from a constant vector the exact
// gradient flow stays on the all-ones ray (only the lambda term acts there)
// and lands on a zero-cut corner; any escape is seeded by floating-point
// rounding in the D x - A x assembly. In double precision that seed is
// frequently absent, so the mean below straddles its threshold. The check
// is asserted as stated rather than loosened.
TEST_CASE("criterion 5: interior stationary points of the Laplacian formulation") {
  bool laplacian_zero = true;
  double perturbed_mean = 0.0;
  double bias_mean = 0.0;
  constexpr int kGraphs = 10;
  for (int gi = 0; gi < kGraphs; ++gi) {
    const Graph g = er(kEscapeN, kEscapeP, derive_seed(kSeed, 2400 + gi));
    Rng rng(derive_seed(kSeed, 2500 + gi));
    const double c = rng.uniform(-1.0, 1.0);

    const auto run_l = stationary_escape_run(g, Laplacian{}, c, 0.1, 5000);
    const auto run_p = stationary_escape_run(g, PerturbedLaplacian{0.001}, c, 0.1, 5000);
    const auto run_b = stationary_escape_run(g, PerturbedBias{0.001}, c, 0.1, 5000);
    if (run_l.final_cut != 0 || run_l.init_cut != 0) laplacian_zero = false;
    perturbed_mean += static_cast<double>(run_p.final_cut) / kGraphs;
    bias_mean += static_cast<double>(run_b.final_cut) / kGraphs;
  }
  line(5, "Laplacian stays at cut 0 exactly", laplacian_zero, "10/10 graphs");
  line(5, "perturbed Laplacian mean final cut >= 40", perturbed_mean >= 40.0,
       "mean " + fmt(perturbed_mean));
  line(5, "perturbed bias mean final cut >= 40", bias_mean >= 40.0,
       "mean " + fmt(bias_mean));
}

TEST_CASE("criterion 6: escape from 1-flip repairable starts") {
  bool laplacian_stuck = true;
  bool perturbed_stuck = true;
  double bias_gain = 0.0;
  constexpr int kGraphs = 10;
  for (int gi = 0; gi < kGraphs; ++gi) {
    const Graph g = er(kEscapeN, kEscapeP, derive_seed(kSeed, 2400 + gi));
    Rng rng(derive_seed(kSeed, 2600 + gi));
    const auto side = random_one_flip_repairable_state(g, rng);

    const auto run_l = repairable_escape_run(g, Laplacian{}, side, 0.1, 5000);
    const auto run_p = repairable_escape_run(g, PerturbedLaplacian{0.001}, side, 0.1, 5000);
    const auto run_b = repairable_escape_run(g, PerturbedBias{0.001}, side, 0.1, 5000);
    if (run_l.final_cut != run_l.init_cut) laplacian_stuck = false;
    if (run_p.final_cut != run_p.init_cut) perturbed_stuck = false;
    bias_gain += static_cast<double>(run_b.final_cut - run_b.init_cut) / kGraphs;
  }
  line(6, "Laplacian is stuck exactly at the initial cut", laplacian_stuck, "10/10");
  line(6, "perturbed Laplacian is stuck exactly", perturbed_stuck, "10/10");
  line(6, "perturbed bias mean improvement >= 4", bias_gain >= 4.0,
       "mean gain " + fmt(bias_gain));
}

TEST_CASE("criterion 7: formulation ordering on converged trajectories") {
  struct Setting {
    Vertex n;
    double d;
  };
  bool bias_beats_laplacian = true;
  bool bias_beats_perturbed = true;
  bool bias_at_least_adjacency = true;
  std::string detail;
  for (const Setting setting : {Setting{100, 50.0}, Setting{1000, 100.0}}) {
    double mean_l = 0.0, mean_p = 0.0, mean_a = 0.0, mean_b = 0.0;
    constexpr int kGraphs = 3;
    for (int gi = 0; gi < kGraphs; ++gi) {
      const Graph g =
          er(setting.n, setting.d / setting.n, derive_seed(kSeed, 2700 + gi));
      Rng rng(derive_seed(kSeed, 2800 + gi));
      const RelaxedState init = init_state(Problem::MaxCut, g, 0.15, rng);

      OptimizerConfig opt;
      opt.alpha = 0.0025;
      opt.beta = 0.8;
      opt.max_iters = 20000;
      const auto cut_of = [&](const ObjectiveSpec& spec) {
        const auto out = run_trajectory(spec, g, init, opt);
        return static_cast<double>(
            extract_solution(Problem::MaxCut, g, out.state).score);
      };
      mean_l += cut_of(Laplacian{}) / kGraphs;
      mean_p += cut_of(PerturbedLaplacian{0.001}) / kGraphs;
      mean_a += cut_of(Adjacency{}) / kGraphs;
      mean_b += cut_of(PerturbedBias{0.001}) / kGraphs;
    }
    if (mean_b < 1.05 * mean_l) bias_beats_laplacian = false;
    if (mean_b < 1.05 * mean_p) bias_beats_perturbed = false;
    if (mean_b < mean_a) bias_at_least_adjacency = false;
    detail += "(n=" + std::to_string(setting.n) + ": fL " + fmt(mean_l) + ", fP " +
              fmt(mean_p) + ", fA " + fmt(mean_a) + ", fB " + fmt(mean_b) + ") ";
  }
  line(7, "f_B beats f_L by >= 5%", bias_beats_laplacian, detail);
  line(7, "f_B beats f_P by >= 5%", bias_beats_perturbed, detail);
  line(7, "f_B >= f_A", bias_at_least_adjacency, detail);
}

TEST_CASE("criterion 8: coordinate resets beat full restarts on the double well") {
  Rng rng(derive_seed(kSeed, 29));
  const ToyResetResult r = toy_reset_experiment(16, 0.05, 200, rng);
  const int expected_budget =
      static_cast<int>(std::ceil(2.0 * 16.0 * std::log(16.0 / 0.05)));
  line(8, "attempt budget is ceil(2 n ln(n/delta))", r.attempt_budget == expected_budget,
       std::to_string(r.attempt_budget) + " attempts");
  line(8, "coordinate reset succeeds in >= 95% of trials",
       r.reset_successes * 100 >= r.trials * 95,
       std::to_string(r.reset_successes) + "/" + std::to_string(r.trials));
  line(8, "full restart succeeds in < 50% of trials", r.restart_successes * 2 < r.trials,
       std::to_string(r.restart_successes) + "/" + std::to_string(r.trials));
}

TEST_CASE("criterion 9: the global reset carries the MIS solver") {
  const double best_rhos[] = {0.4, 0.5, 0.6, 0.7};
  std::array<double, 5> means{};  // index 0 = rho 0
  const Graph g1 = er(3000, 100.0 / 3000.0, derive_seed(kSeed, 3100));
  const Graph g2 = er(3000, 100.0 / 3000.0, derive_seed(kSeed, 3200));
  const Graph g3 = er(3000, 100.0 / 3000.0, derive_seed(kSeed, 3300));
  const Graph* graphs[] = {&g1, &g2, &g3};

  std::string detail;
  for (int ri = 0; ri < 5; ++ri) {
    const double rho = ri == 0 ? 0.0 : best_rhos[ri - 1];
    double mean = 0.0;
    for (int si = 0; si < 3; ++si) {
      SolverConfig cfg = mis_preset(60.0, derive_seed(kSeed, 3400 + 10 * ri + si));
      cfg.reset_fraction = rho;
      cfg.reset_rounds = 60;
      mean += static_cast<double>(solve_mis(*graphs[si], cfg).best.score) / 3.0;
    }
    means[ri] = mean;
    detail += "rho=" + fmt(rho) + ": " + fmt(mean) + "  ";
  }
  const double best_nonzero = *std::max_element(means.begin() + 1, means.end());
  line(9, "best rho in {0.4..0.7} strictly beats rho = 0", best_nonzero > means[0],
       detail);
}

TEST_CASE("criterion 10: phase gains follow the reset-dominant pattern") {
  const Graph g = er(3000, 100.0 / 3000.0, derive_seed(kSeed, 3500));
  SolverConfig cfg = mis_preset(60.0, derive_seed(kSeed, 3501));
  cfg.reset_fraction = 0.6;
  const RunReport r = solve_mis(g, cfg);
  const int64_t reset_gain = r.phases.after_reset_loop - r.phases.after_gradient;
  const int64_t ls_gain = r.phases.after_local_search - r.phases.after_reset_loop;
  line(10, "reset gain > local-search gain >= 0", reset_gain > ls_gain && ls_gain >= 0,
       "gradient " + std::to_string(r.phases.after_gradient) + " -> reset +" +
           std::to_string(reset_gain) + " -> local search +" + std::to_string(ls_gain));
}

TEST_CASE("criterion 11: desk-scaled ER(1000, 100) MIS point") {
  const Graph g = er(1000, 0.1, derive_seed(kSeed, 3600));
  double mean = 0.0;
  std::string detail;
  for (int si = 0; si < 8; ++si) {
    SolverConfig cfg = mis_preset(60.0, derive_seed(kSeed, 3700 + si));
    cfg.reset_fraction = 0.7;  // tuned row for (1000, 100)
    const RunReport r = solve_mis(g, cfg);
    mean += static_cast<double>(r.best.score) / 8.0;
    detail += std::to_string(r.best.score) + " ";
  }
  line(11, "mean MIS size >= 63 over 8 seeds at 60 s", mean >= 63.0,
       "mean " + fmt(mean) + " [" + detail + "]");
}

TEST_CASE("extra: desk-scale MaxCut quality at (100, 50)") {
  // sanity companion to the criteria: near-optimal cuts on the dense
  // 100-vertex instances within one minute
  double mean = 0.0;
  std::string detail;
  for (int si = 0; si < 3; ++si) {
    const Graph g = er(100, 0.5, derive_seed(kSeed, 3800 + si));
    const RunReport r = solve_maxcut(g, maxcut_preset(60.0, derive_seed(kSeed, 3900 + si)));
    mean += static_cast<double>(r.best.score) / 3.0;
    detail += std::to_string(r.best.score) + " ";
  }
  line(0, "mean cut >= 1425 on ER(100, d=50)", mean >= 1425.0,
       "mean " + fmt(mean) + " [" + detail + "]");
}

namespace {

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(MQO_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  pclose(pipe);
  return output;
}

std::string strip_timing(const std::string& record_text) {
  auto record = nlohmann::json::parse(record_text);
  record.erase("timing");
  return record.dump();
}

}  // namespace

TEST_CASE("criterion 12: identical flags and seed give byte-identical records") {
  const std::string mis_flags =
      "solve --problem mis --gen er:80:6 --seed 11 --budget-secs 120 --max-outer 2 "
      "--tgs 10 --report json";
  const std::string a = run_cli(mis_flags);
  const std::string b = run_cli(mis_flags);
  REQUIRE_FALSE(a.empty());
  line(12, "MIS records match byte for byte (timing excluded)",
       strip_timing(a) == strip_timing(b), std::to_string(a.size()) + " bytes");

  const std::string cut_flags =
      "solve --problem maxcut --gen er:80:6 --seed 11 --budget-secs 120 --max-outer 1 "
      "--tgs 10 --report json";
  const std::string c = run_cli(cut_flags);
  const std::string d = run_cli(cut_flags);
  line(12, "MaxCut records match byte for byte (timing excluded)",
       strip_timing(c) == strip_timing(d), std::to_string(c.size()) + " bytes");
}
