#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "mqo/solver.hpp"

namespace mqo {

// Where a run's instance came from, echoed into every record so the
// solution can be re-scored later.
struct GraphDescriptor {
  std::string source;    // "file" or "generator"
  std::string path;      // file source only
  std::string gen_spec;  // generator source only, e.g. "er:1000:100"
  uint64_t gen_seed = 0;
  Vertex n = 0;
  int64_t m = 0;
};

inline constexpr int kRunRecordSchemaVersion = 1;

// Builds the versioned RunRecord. Re-decodes the serialized solution and
// re-scores it against `g`; throws std::logic_error on any mismatch, so
// every emitted record is round-trip safe by construction.
nlohmann::json run_record_json(Problem problem, const GraphDescriptor& graph,
                               const RunReport& report, const Graph& g,
                               double graph_load_secs);

// Reads back the solution of a RunRecord. Unknown fields are ignored.
Solution solution_from_record(const nlohmann::json& record, Vertex n);

std::string run_record_csv_header();
std::string run_record_csv_row(const std::string& param, const std::string& value,
                               const GraphDescriptor& graph, const RunReport& report);

}  // namespace mqo
