#include <CLI11.hpp>
#include <iostream>

#include "cli_common.hpp"

namespace {

using namespace mqo;
using namespace mqo::cli;

void add_solve_options(CLI::App* cmd, SolveOptions& opt) {
  cmd->add_option("--problem", opt.problem, "mis or maxcut")
      ->check(CLI::IsMember({"mis", "maxcut"}));
  cmd->add_option("--graph", opt.graph_file, "graph file (canonical or DIMACS)");
  cmd->add_option("--gen", opt.gen_spec,
                  "generator spec, e.g. er:1000:100, er:100:p0.5, ba:1000:4, "
                  "sbm:1000:2:0.5:0.05");
  cmd->add_option("--budget-secs", opt.budget_secs, "wall-clock budget");
  cmd->add_option("--seed", opt.seed, "RNG seed");
  cmd->add_option("--alpha", opt.alpha, "step size");
  cmd->add_option("--momentum", opt.momentum, "heavy-ball momentum in [0,1)");
  cmd->add_option("--rho", opt.rho, "global reset fraction in [0,1)");
  cmd->add_option("--tgs", opt.tgs, "reset rounds per outer loop");
  cmd->add_option("--lambda", opt.lambda, "perturbation strength");
  cmd->add_option("--gamma", opt.gamma, "MIS edge penalty (> 1)");
  cmd->add_option("--sigma", opt.sigma, "init noise std dev");
  cmd->add_option("--max-iters", opt.max_iters, "iteration cap per trajectory");
  cmd->add_option("--conv-tol", opt.conv_tol, "MaxCut convergence tolerance");
  cmd->add_option("--check-every", opt.check_every, "iterations between MIS checks");
  cmd->add_option("--pool-b", opt.pool_b, "trajectories per phase (pooled variant)");
  cmd->add_option("--pool-k", opt.pool_k, "retained solutions (pooled variant)");
  cmd->add_flag("--no-local-search", opt.no_local_search, "disable discrete local search");
  cmd->add_option("--objective", opt.objective,
                  "mis-qubo | laplacian | perturbed-laplacian | adjacency | perturbed-bias")
      ->check(CLI::IsMember({"mis-qubo", "laplacian", "perturbed-laplacian", "adjacency",
                             "perturbed-bias"}));
  cmd->add_option("--preset", opt.preset, "auto (nearest tuned row) or none")
      ->check(CLI::IsMember({"auto", "none"}));
  cmd->add_option("--init-constant", opt.init_constant,
                  "start from the constant vector c*1 instead of the degree init");
  cmd->add_option("--stop-at-score", opt.stop_at_score, "stop early at this score");
  cmd->add_option("--max-outer", opt.max_outer, "cap on outer loops");
  cmd->add_option("--report", opt.report, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out_file, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mQO: mutation-based quadratic optimization for MIS and MaxCut"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random graph file");
  std::string gen_kind = "er";
  Vertex gen_n = 0;
  std::optional<double> gen_d, gen_p;
  Vertex gen_m_attach = 1;
  int gen_k = 2;
  double gen_p_in = 0.5, gen_p_out = 0.05;
  uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "er, ba or sbm")
      ->check(CLI::IsMember({"er", "ba", "sbm"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "ER mean degree (p = d/n)");
  gen->add_option("--p", gen_p, "ER edge probability");
  gen->add_option("--m-attach", gen_m_attach, "BA edges per new node");
  gen->add_option("--k", gen_k, "SBM block count");
  gen->add_option("--p-in", gen_p_in, "SBM intra-block probability");
  gen->add_option("--p-out", gen_p_out, "SBM inter-block probability");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output file (stdout if omitted)");

  // solve
  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "run the mQO solver on one instance");
  add_solve_options(solve, solve_opt);

  // sweep
  SolveOptions sweep_opt;
  std::string sweep_param, sweep_values, sweep_seeds, sweep_jsonl;
  int sweep_jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "sweep one parameter, emit CSV");
  add_solve_options(sweep, sweep_opt);
  sweep->add_option("--param", sweep_param, "rho | lambda | momentum | local-search")
      ->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")->required();
  sweep->add_option("--seeds", sweep_seeds, "comma-separated seeds (default: --seed)");
  sweep->add_option("--jobs", sweep_jobs, "parallel solves");
  sweep->add_option("--jsonl", sweep_jsonl, "also write one JSON record per run");

  // verify
  std::string verify_suite = "all";
  int verify_max_n = 12;
  Vertex verify_n = 100;
  double verify_p = 0.0166;
  uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "oracle-backed verification suites");
  verify->add_option("--suite", verify_suite,
                     "all | fixed-points | escapability | exact | toy-reset");
  verify->add_option("--max-n", verify_max_n, "size cap for enumeration suites");
  verify->add_option("--n", verify_n, "escapability instance size");
  verify->add_option("--p", verify_p, "escapability edge probability");
  verify->add_option("--seed", verify_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_d, gen_p, gen_m_attach, gen_k, gen_p_in,
                     gen_p_out, gen_seed, gen_out);
    if (solve->parsed()) return cmd_solve(solve_opt);
    if (sweep->parsed())
      return cmd_sweep(sweep_opt, sweep_param, sweep_values, sweep_seeds, sweep_jobs,
                       sweep_jsonl);
    if (verify->parsed())
      return cmd_verify(verify_suite, verify_max_n, verify_n, verify_p, verify_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
