#pragma once

#include <optional>
#include <string>

#include "mqo/graph_io.hpp"
#include "mqo/report_json.hpp"
#include "mqo/solver.hpp"

namespace mqo::cli {

// Exit codes: 0 success, 1 suite failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator spec strings: er:<n>:<d>, er:<n>:p<p>, ba:<n>:<m>,
// sbm:<n>:<k>:<p_in>:<p_out>. Degrees convert to p = d/n.
GraphGenSpec parse_gen_spec(const std::string& text, uint64_t seed);

struct Instance {
  Graph graph;
  GraphDescriptor descriptor;
  double load_secs = 0.0;
  std::vector<std::string> warnings;
};

Instance load_instance(const std::string& graph_file, const std::string& gen_spec,
                       uint64_t seed);

struct SolveOptions {
  std::string problem = "mis";
  std::string graph_file;
  std::string gen_spec;
  std::string objective;  // empty = problem default
  std::string preset = "auto";
  std::string report = "json";
  std::string out_file;
  double budget_secs = 10.0;
  uint64_t seed = 1;
  std::optional<double> alpha, momentum, rho, lambda, gamma, sigma, conv_tol;
  std::optional<int> tgs, max_iters, check_every, pool_b, pool_k, max_outer;
  std::optional<double> init_constant;
  std::optional<int64_t> stop_at_score;
  bool no_local_search = false;
};

// Resolves presets and flags into a SolverConfig (explicit flags win).
SolverConfig build_config(const SolveOptions& opt, const Graph& g);

struct SolveResult {
  RunReport report;
  GraphDescriptor descriptor;
  Graph graph;  // original instance, for re-scoring
  double load_secs = 0.0;
};

// Strips isolated vertices, solves, re-embeds removed vertices.
SolveResult run_solve(const SolveOptions& opt);

int cmd_gen(const std::string& kind, Vertex n, std::optional<double> d,
            std::optional<double> p, Vertex m_attach, int k, double p_in, double p_out,
            uint64_t seed, const std::string& out);
int cmd_solve(const SolveOptions& opt);
int cmd_sweep(const SolveOptions& opt, const std::string& param,
              const std::string& values, const std::string& seeds, int jobs,
              const std::string& jsonl_path);
int cmd_verify(const std::string& suite, int max_n, Vertex n, double p, uint64_t seed);

}  // namespace mqo::cli
