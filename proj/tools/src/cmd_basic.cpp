#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "cli_common.hpp"

namespace mqo::cli {

int cmd_gen(const std::string& kind, Vertex n, std::optional<double> d,
            std::optional<double> p, Vertex m_attach, int k, double p_in, double p_out,
            uint64_t seed, const std::string& out) {
  GraphGenSpec spec;
  spec.seed = seed;
  if (kind == "er") {
    if (d.has_value() == p.has_value())
      throw UsageError("er needs exactly one of --d and --p");
    ErSpec er;
    er.n = n;
    er.p = p ? *p : *d / n;
    spec.kind = er;
  } else if (kind == "ba") {
    spec.kind = BaSpec{n, m_attach};
  } else if (kind == "sbm") {
    spec.kind = SbmSpec{n, k, p_in, p_out};
  } else {
    throw UsageError("unknown --kind '" + kind + "' (er, ba, sbm)");
  }

  Graph g;
  try {
    g = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (out.empty()) {
    write_canonical(g, std::cout);
  } else {
    write_graph_file(g, out);
    std::cerr << "wrote n=" << g.n() << " m=" << g.m() << " to " << out << "\n";
  }
  return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
  SolveResult result = run_solve(opt);
  const Problem problem = opt.problem == "mis" ? Problem::Mis : Problem::MaxCut;

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.out_file.empty()) {
    file.open(opt.out_file);
    if (!file) throw UsageError("cannot open --out file " + opt.out_file);
    out = &file;
  }

  if (opt.report == "json") {
    *out << run_record_json(problem, result.descriptor, result.report, result.graph,
                            result.load_secs)
                .dump()
         << "\n";
  } else if (opt.report == "csv") {
    *out << run_record_csv_header() << "\n"
         << run_record_csv_row("-", "-", result.descriptor, result.report) << "\n";
  } else {
    throw UsageError("--report must be json or csv");
  }
  for (const auto& w : result.report.warnings) std::cerr << "warning: " << w << "\n";
  return kExitOk;
}

}  // namespace mqo::cli
