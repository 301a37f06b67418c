#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mqo/rng.hpp"

namespace mqo {

using Vertex = int32_t;

// Immutable sparse undirected graph in CSR form: sorted neighbor lists,
// no self-loops, no duplicate edges. Safe to share across threads after
// construction. All matrix actions (A*x, L*x) stream over this structure;
// no matrix is ever materialized.
class Graph {
 public:
  Graph() = default;

  // Builds from an undirected edge list. Edges may appear in any order
  // and orientation; duplicates are collapsed. Self-loops are rejected.
  static Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

  Vertex n() const { return n_; }
  int64_t m() const { return m_; }

  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  Vertex max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const;

  // y_v = sum_{u in N(v)} x_u. O(m).
  void adjacency_apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> adjacency_apply(std::span<const double> x) const;

  // y_v = sum_{u in N(v)} (x_v - x_u). Edge-difference form, so constant
  // vectors map to exactly zero in floating point. O(m).
  void laplacian_apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> laplacian_apply(std::span<const double> x) const;

  // Ordered edge list (u < v), for serialization and oracles.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  void check_invariants() const;

  Vertex n_ = 0;
  int64_t m_ = 0;
  Vertex max_degree_ = 0;
  std::vector<int64_t> offsets_;    // size n+1
  std::vector<Vertex> neighbors_;  // size 2m, sorted per vertex
};

// --- random generators ------------------------------------------------

struct ErSpec {
  Vertex n = 0;
  double p = 0.0;  // per-pair edge probability
};

struct BaSpec {
  Vertex n = 0;
  Vertex m_attach = 1;  // edges attached by each arriving node
};

struct SbmSpec {
  Vertex n = 0;
  int k = 2;
  double p_in = 0.0;
  double p_out = 0.0;
};

struct GraphGenSpec {
  std::variant<ErSpec, BaSpec, SbmSpec> kind;
  uint64_t seed = 0;
};

// Deterministic per (spec, seed): ER and SBM draw per-pair Bernoulli in
// canonical (u < v) order; BA uses preferential attachment over the
// running endpoint list. Throws std::invalid_argument on bad parameters.
Graph generate(const GraphGenSpec& spec);

// --- structure helpers -------------------------------------------------

struct StripResult {
  Graph core;                        // min degree >= 1
  std::vector<Vertex> removed;       // isolated vertices, ascending
  std::vector<Vertex> core_to_orig;  // size core.n()
  std::vector<Vertex> orig_to_core;  // -1 for removed vertices
};

// Removes degree-0 vertices. For MIS the removed vertices are always part
// of any solution; for MaxCut their side is irrelevant.
StripResult strip_isolated(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace mqo
