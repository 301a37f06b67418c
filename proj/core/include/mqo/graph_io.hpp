#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqo/graph.hpp"

namespace mqo {

// Parse failure with the offending 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct DimacsResult {
  Graph graph;
  int64_t declared_edges = 0;
  int64_t parsed_edges = 0;
  std::vector<std::string> warnings;  // e.g. declared m != parsed m
};

// DIMACS edge format: `c` comment lines, one `p edge <n> <m>` header,
// `e <u> <v>` lines with 1-based endpoints. Duplicate and reversed edges
// are collapsed; a declared/parsed edge-count mismatch is a warning, not
// an error (benchmark files are known to be inconsistent). Self-loops and
// out-of-range endpoints are errors.
DimacsResult parse_dimacs(std::istream& in);
DimacsResult parse_dimacs_text(const std::string& text);

// Canonical graph file: header `n m`, then one `u v` line per edge,
// 0-based, u < v, edges sorted.
Graph read_canonical(std::istream& in);
void write_canonical(const Graph& g, std::ostream& out);

// Loads either format (sniffs DIMACS by a leading `c` or `p`). Warnings,
// if any, are appended to *warnings.
Graph load_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace mqo
