#include "mqo/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mqo {

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

DimacsResult parse_dimacs(std::istream& in) {
  DimacsResult result;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate 'p' line");
      std::string fmt;
      int64_t declared_m = 0;
      if (!(ls >> fmt >> n >> declared_m))
        throw ParseError(lineno, "malformed 'p' line, expected 'p edge <n> <m>'");
      if (n < 0 || declared_m < 0) throw ParseError(lineno, "negative n or m");
      result.declared_edges = declared_m;
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header)
        throw ParseError(lineno, "edge before 'p edge <n> <m>' header");
      int64_t u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed 'e' line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "vertex index outside [1, n]");
      if (u == v) throw ParseError(lineno, "self-loop");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unrecognized line tag '" + tag + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing 'p edge <n> <m>' header");

  result.graph = Graph::from_edges(n, std::move(edges));
  result.parsed_edges = result.graph.m();
  if (result.parsed_edges != result.declared_edges) {
    result.warnings.push_back("declared m=" + std::to_string(result.declared_edges) +
                              " but parsed m=" + std::to_string(result.parsed_edges) +
                              " after deduplication");
  }
  return result;
}

DimacsResult parse_dimacs_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Graph read_canonical(std::istream& in) {
  Vertex n = 0;
  int64_t m = 0;
  if (!(in >> n >> m)) throw ParseError(1, "missing 'n m' header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int64_t i = 0; i < m; ++i) {
    int64_t u = 0, v = 0;
    if (!(in >> u >> v))
      throw ParseError(static_cast<int>(i + 2), "truncated edge list");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, std::move(edges));
}

void write_canonical(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  // DIMACS files start with 'c' or 'p'; the canonical format with a digit.
  const int first = in.peek();
  if (first == 'c' || first == 'p') {
    DimacsResult r = parse_dimacs(in);
    if (warnings)
      warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());
    return std::move(r.graph);
  }
  return read_canonical(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_canonical(g, out);
}

}  // namespace mqo
