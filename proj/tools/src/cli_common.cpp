#include "cli_common.hpp"

#include <chrono>
#include <sstream>

#include "mqo/presets.hpp"

namespace mqo::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
}

int64_t to_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
}

}  // namespace

GraphGenSpec parse_gen_spec(const std::string& text, uint64_t seed) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw UsageError("empty generator spec");
  GraphGenSpec spec;
  spec.seed = seed;
  const std::string& kind = parts[0];
  if (kind == "er") {
    if (parts.size() != 3) throw UsageError("er spec is er:<n>:<d> or er:<n>:p<p>");
    ErSpec er;
    er.n = static_cast<Vertex>(to_int(parts[1], "n"));
    if (!parts[2].empty() && parts[2][0] == 'p') {
      er.p = to_double(parts[2].substr(1), "p");
    } else {
      const double d = to_double(parts[2], "d");
      if (er.n <= 0) throw UsageError("er spec needs n > 0");
      er.p = d / er.n;
    }
    spec.kind = er;
  } else if (kind == "ba") {
    if (parts.size() != 3) throw UsageError("ba spec is ba:<n>:<m_attach>");
    spec.kind = BaSpec{static_cast<Vertex>(to_int(parts[1], "n")),
                       static_cast<Vertex>(to_int(parts[2], "m_attach"))};
  } else if (kind == "sbm") {
    if (parts.size() != 5) throw UsageError("sbm spec is sbm:<n>:<k>:<p_in>:<p_out>");
    spec.kind = SbmSpec{static_cast<Vertex>(to_int(parts[1], "n")),
                        static_cast<int>(to_int(parts[2], "k")),
                        to_double(parts[3], "p_in"), to_double(parts[4], "p_out")};
  } else {
    throw UsageError("unknown generator kind '" + kind + "' (er, ba, sbm)");
  }
  return spec;
}

Instance load_instance(const std::string& graph_file, const std::string& gen_spec,
                       uint64_t seed) {
  if (graph_file.empty() == gen_spec.empty())
    throw UsageError("exactly one of --graph and --gen is required");
  Instance inst;
  const auto t0 = std::chrono::steady_clock::now();
  if (!graph_file.empty()) {
    inst.graph = load_graph_file(graph_file, &inst.warnings);
    inst.descriptor.source = "file";
    inst.descriptor.path = graph_file;
  } else {
    inst.graph = generate(parse_gen_spec(gen_spec, seed));
    inst.descriptor.source = "generator";
    inst.descriptor.gen_spec = gen_spec;
    inst.descriptor.gen_seed = seed;
  }
  inst.load_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  inst.descriptor.n = inst.graph.n();
  inst.descriptor.m = inst.graph.m();
  return inst;
}

SolverConfig build_config(const SolveOptions& opt, const Graph& g) {
  const Problem problem = opt.problem == "mis" ? Problem::Mis : Problem::MaxCut;
  SolverConfig cfg;

  const double gamma = opt.gamma.value_or(2.0);
  const double lambda = opt.lambda.value_or(0.001);
  std::string objective = opt.objective;
  if (objective.empty()) objective = problem == Problem::Mis ? "mis-qubo" : "perturbed-bias";
  if (objective == "mis-qubo") {
    cfg.objective = MisQubo{gamma};
  } else if (objective == "laplacian") {
    cfg.objective = Laplacian{};
  } else if (objective == "perturbed-laplacian") {
    cfg.objective = PerturbedLaplacian{lambda};
  } else if (objective == "adjacency") {
    cfg.objective = Adjacency{};
  } else if (objective == "perturbed-bias") {
    cfg.objective = PerturbedBias{lambda};
  } else {
    throw UsageError("unknown objective '" + objective + "'");
  }
  if (problem_of(cfg.objective) != problem)
    throw UsageError("objective '" + objective + "' does not fit problem '" + opt.problem + "'");

  if (opt.preset == "auto") {
    const double mean_degree = g.n() > 0 ? 2.0 * static_cast<double>(g.m()) / g.n() : 0.0;
    const Preset preset = preset_for(problem, g.n(), mean_degree);
    cfg.optimizer.alpha = preset.alpha;
    cfg.optimizer.beta = preset.momentum;
    cfg.reset_fraction = preset.rho;
    cfg.reset_rounds = preset.reset_rounds;
  } else if (opt.preset != "none") {
    throw UsageError("--preset must be 'auto' or 'none'");
  }

  if (opt.alpha) cfg.optimizer.alpha = *opt.alpha;
  if (opt.momentum) cfg.optimizer.beta = *opt.momentum;
  if (opt.max_iters) cfg.optimizer.max_iters = *opt.max_iters;
  if (opt.conv_tol) cfg.optimizer.conv_tol = *opt.conv_tol;
  if (opt.check_every) cfg.optimizer.check_every = *opt.check_every;
  if (opt.rho) cfg.reset_fraction = *opt.rho;
  if (opt.tgs) cfg.reset_rounds = *opt.tgs;
  if (opt.sigma) cfg.init_noise = *opt.sigma;
  cfg.time_budget_secs = opt.budget_secs;
  cfg.seed = opt.seed;
  cfg.local_search = !opt.no_local_search;
  if (opt.pool_b) cfg.pool.batch = *opt.pool_b;
  if (opt.pool_k) cfg.pool.keep = *opt.pool_k;
  cfg.init_constant = opt.init_constant;
  cfg.stop_at_score = opt.stop_at_score;
  cfg.max_outer_loops = opt.max_outer;
  return cfg;
}

SolveResult run_solve(const SolveOptions& opt) {
  Instance inst = load_instance(opt.graph_file, opt.gen_spec, opt.seed);
  const Problem problem = opt.problem == "mis" ? Problem::Mis : Problem::MaxCut;
  SolverConfig cfg = build_config(opt, inst.graph);

  SolveResult result;
  result.descriptor = inst.descriptor;
  result.load_secs = inst.load_secs;

  // The solver core expects min degree >= 1; isolated vertices join every
  // MIS and are cut-neutral for MaxCut, so peel and re-embed them here.
  const bool needs_strip = inst.graph.m() > 0 && [&] {
    for (Vertex v = 0; v < inst.graph.n(); ++v)
      if (inst.graph.degree(v) == 0) return true;
    return false;
  }();

  if (!needs_strip) {
    result.report = solve_pooled(inst.graph, cfg);
  } else {
    StripResult strip = strip_isolated(inst.graph);
    RunReport core = solve_pooled(strip.core, cfg);
    const auto removed = static_cast<int64_t>(strip.removed.size());
    if (problem == Problem::Mis) {
      auto& is = std::get<IndependentSet>(core.best.body);
      std::vector<Vertex> members;
      members.reserve(is.members.size() + strip.removed.size());
      for (Vertex v : is.members) members.push_back(strip.core_to_orig[v]);
      members.insert(members.end(), strip.removed.begin(), strip.removed.end());
      std::sort(members.begin(), members.end());
      is.members = std::move(members);
      core.best.score += removed;
      core.phases.after_gradient += removed;
      core.phases.after_reset_loop += removed;
      core.phases.after_local_search += removed;
    } else {
      auto& cut = std::get<CutPartition>(core.best.body);
      std::vector<uint8_t> side(inst.graph.n(), 0);
      for (Vertex v = 0; v < strip.core.n(); ++v) side[strip.core_to_orig[v]] = cut.side[v];
      cut.side = std::move(side);
    }
    core.warnings.push_back("stripped " + std::to_string(removed) +
                            " isolated vertices before solving");
    result.report = std::move(core);
  }
  result.report.warnings.insert(result.report.warnings.end(), inst.warnings.begin(),
                                inst.warnings.end());
  result.graph = std::move(inst.graph);
  return result;
}

}  // namespace mqo::cli
