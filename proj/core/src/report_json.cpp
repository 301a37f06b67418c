#include "mqo/report_json.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace mqo {

using nlohmann::json;

namespace {

// Bitmaps above this size are stored run-length encoded.
constexpr Vertex kRleThreshold = 512;

json encode_bits(const std::vector<uint8_t>& bits) {
  const auto n = static_cast<Vertex>(bits.size());
  if (n <= kRleThreshold) {
    json arr = json::array();
    for (uint8_t b : bits) arr.push_back(static_cast<int>(b));
    return json{{"encoding", "plain"}, {"bits", std::move(arr)}};
  }
  json runs = json::array();
  Vertex start = 0;
  for (Vertex i = 1; i <= n; ++i) {
    if (i == n || bits[i] != bits[start]) {
      runs.push_back(i - start);
      start = i;
    }
  }
  return json{{"encoding", "rle"}, {"first", static_cast<int>(bits[0])},
              {"runs", std::move(runs)}};
}

std::vector<uint8_t> decode_bits(const json& j, Vertex n) {
  std::vector<uint8_t> bits;
  bits.reserve(n);
  if (j.at("encoding") == "plain") {
    for (const auto& b : j.at("bits")) bits.push_back(b.get<int>() ? 1 : 0);
  } else {
    uint8_t value = j.at("first").get<int>() ? 1 : 0;
    for (const auto& run : j.at("runs")) {
      bits.insert(bits.end(), run.get<Vertex>(), value);
      value ^= 1;
    }
  }
  if (static_cast<Vertex>(bits.size()) != n)
    throw std::logic_error("solution bitmap length does not match n");
  return bits;
}

json solution_json(const Solution& sol, Vertex n) {
  json j;
  if (const auto* is = std::get_if<IndependentSet>(&sol.body)) {
    j["kind"] = "independent_set";
    std::vector<uint8_t> bits(n, 0);
    for (Vertex v : is->members) bits[v] = 1;
    j["members"] = encode_bits(bits);
  } else {
    j["kind"] = "cut_partition";
    j["side"] = encode_bits(std::get<CutPartition>(sol.body).side);
  }
  j["score"] = sol.score;
  return j;
}

json objective_json(const ObjectiveSpec& spec) {
  json j{{"name", objective_name(spec)}};
  if (const auto* q = std::get_if<MisQubo>(&spec)) j["gamma"] = q->gamma;
  if (const auto* p = std::get_if<PerturbedLaplacian>(&spec)) j["lambda"] = p->lambda;
  if (const auto* b = std::get_if<PerturbedBias>(&spec)) j["lambda"] = b->lambda;
  return j;
}

json config_json(const SolverConfig& cfg) {
  json j{{"objective", objective_json(cfg.objective)},
         {"alpha", cfg.optimizer.alpha},
         {"momentum", cfg.optimizer.beta},
         {"max_iters", cfg.optimizer.max_iters},
         {"conv_tol", cfg.optimizer.conv_tol},
         {"check_every", cfg.optimizer.check_every},
         {"rho", cfg.reset_fraction},
         {"tgs", cfg.reset_rounds},
         {"sigma", cfg.init_noise},
         {"budget_secs", cfg.time_budget_secs},
         {"seed", cfg.seed},
         {"local_search", cfg.local_search},
         {"pool_b", cfg.pool.batch},
         {"pool_k", cfg.pool.keep}};
  if (cfg.init_constant) j["init_constant"] = *cfg.init_constant;
  if (cfg.stop_at_score) j["stop_at_score"] = *cfg.stop_at_score;
  if (cfg.max_outer_loops) j["max_outer_loops"] = *cfg.max_outer_loops;
  return j;
}

json graph_json(const GraphDescriptor& d) {
  json j{{"source", d.source}, {"n", d.n}, {"m", d.m}};
  if (d.source == "file") {
    j["path"] = d.path;
  } else {
    j["spec"] = d.gen_spec;
    j["seed"] = d.gen_seed;
  }
  return j;
}

}  // namespace

json run_record_json(Problem problem, const GraphDescriptor& graph,
                     const RunReport& report, const Graph& g, double graph_load_secs) {
  json record{
      {"schema_version", kRunRecordSchemaVersion},
      {"problem", problem == Problem::Mis ? "mis" : "maxcut"},
      {"graph", graph_json(graph)},
      {"config", config_json(report.config)},
      {"best_score", report.best.score},
      {"found_solution", report.found_solution},
      {"solution", solution_json(report.best, g.n())},
      {"phases",
       {{"after_gradient", report.phases.after_gradient},
        {"after_reset_loop", report.phases.after_reset_loop},
        {"after_local_search", report.phases.after_local_search}}},
      {"counters",
       {{"outer_loops", report.outer_loops},
        {"trajectories", report.trajectories},
        {"resets_accepted", report.resets_accepted},
        {"resets_rejected", report.resets_rejected},
        {"iterations", report.total_iterations}}},
      {"stop", stop_reason_name(report.last_trajectory_stop)},
      {"timing", {{"solve_secs", report.elapsed_secs}, {"graph_load_secs", graph_load_secs}}},
      {"warnings", report.warnings},
  };

  const Solution decoded = solution_from_record(record, g.n());
  if (score_solution(g, decoded) != report.best.score)
    throw std::logic_error("run record round-trip: re-scored solution != best score");
  return record;
}

Solution solution_from_record(const json& record, Vertex n) {
  const json& j = record.at("solution");
  Solution sol;
  sol.score = j.at("score").get<int64_t>();
  if (j.at("kind") == "independent_set") {
    const auto bits = decode_bits(j.at("members"), n);
    IndependentSet is;
    for (Vertex v = 0; v < n; ++v)
      if (bits[v]) is.members.push_back(v);
    sol.body = std::move(is);
  } else {
    sol.body = CutPartition{decode_bits(j.at("side"), n)};
  }
  return sol;
}

std::string run_record_csv_header() {
  return "problem,param,value,seed,n,m,best,after_gradient,after_reset_loop,"
         "after_local_search,resets_accepted,resets_rejected,outer_loops,"
         "iterations,elapsed_secs";
}

std::string run_record_csv_row(const std::string& param, const std::string& value,
                               const GraphDescriptor& graph, const RunReport& report) {
  std::ostringstream row;
  row << (problem_of(report.config.objective) == Problem::Mis ? "mis" : "maxcut") << ','
      << param << ',' << value << ',' << report.config.seed << ',' << graph.n << ','
      << graph.m << ',' << report.best.score << ',' << report.phases.after_gradient << ','
      << report.phases.after_reset_loop << ',' << report.phases.after_local_search << ','
      << report.resets_accepted << ',' << report.resets_rejected << ','
      << report.outer_loops << ',' << report.total_iterations << ','
      << report.elapsed_secs;
  return row.str();
}

}  // namespace mqo
