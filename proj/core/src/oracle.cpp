#include "mqo/oracle.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace mqo::oracle {

namespace {

std::vector<uint32_t> adjacency_masks(const Graph& g) {
  std::vector<uint32_t> adj(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= 1u << u;
  return adj;
}

std::vector<Vertex> mask_to_members(uint32_t mask, Vertex n) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (mask & (1u << v)) members.push_back(v);
  return members;
}

struct MisSearch {
  const std::vector<uint32_t>& adj;
  int best = -1;
  uint32_t best_mask = 0;

  void run(uint32_t candidates, uint32_t current, int size) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      if (size > best) {
        best = size;
        best_mask = current;
      }
      return;
    }
    // Branch on the candidate with the most candidate neighbors.
    uint32_t rest = candidates;
    int pick = std::countr_zero(candidates);
    int pick_deg = -1;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const int deg = std::popcount(adj[v] & candidates);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    const uint32_t bit = 1u << pick;
    run(candidates & ~(adj[pick] | bit), current | bit, size + 1);
    run(candidates & ~bit, current, size);
  }
};

}  // namespace

std::string graph_fingerprint(const Graph& g) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<uint64_t>(g.n()));
  mix(static_cast<uint64_t>(g.m()));
  for (const auto& [u, v] : g.edges())
    mix((static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v));
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExactResult exact_mis(const Graph& g) {
  if (g.n() > 26) throw std::invalid_argument("exact_mis: instance too large (n > 26)");
  const auto adj = adjacency_masks(g);
  MisSearch search{adj};
  search.run((1u << g.n()) - 1u, 0, 0);

  ExactResult r;
  r.optimum = search.best;
  r.solution.body = IndependentSet{mask_to_members(search.best_mask, g.n())};
  r.solution.score = search.best;
  r.fingerprint = graph_fingerprint(g);
  if (g.n() <= 16) {
    uint64_t count = 0;
    for (uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
      if (std::popcount(mask) != search.best) continue;
      bool ok = true;
      for (uint32_t rest = mask; rest && ok; rest &= rest - 1)
        ok = (adj[std::countr_zero(rest)] & mask) == 0;
      if (ok) ++count;
    }
    r.num_optima = count;
  }
  return r;
}

ExactResult exact_maxcut(const Graph& g) {
  if (g.n() > 24) throw std::invalid_argument("exact_maxcut: instance too large (n > 24)");
  const auto adj = adjacency_masks(g);
  const Vertex n = g.n();

  // Gray-code walk over the 2^(n-1) partitions with vertex n-1 pinned to
  // side 0; each flip updates the cut in O(1) via popcounts.
  uint32_t side = 0;
  int64_t cut = 0;
  int64_t best = 0;
  uint32_t best_side = 0;
  uint64_t count = 1;  // the empty cut, updated below if beaten
  const uint64_t steps = n <= 1 ? 0 : (1ull << (n - 1)) - 1;
  for (uint64_t k = 1; k <= steps; ++k) {
    const int v = std::countr_zero(k);
    const int on_side1 = std::popcount(adj[v] & side);
    const int same = (side >> v) & 1u ? on_side1 : g.degree(v) - on_side1;
    cut += 2 * same - g.degree(v);  // same - cross
    side ^= 1u << v;
    if (cut > best) {
      best = cut;
      best_side = side;
      count = 1;
    } else if (cut == best) {
      ++count;
    }
  }

  ExactResult r;
  r.optimum = best;
  CutPartition part;
  part.side.resize(n);
  for (Vertex v = 0; v < n; ++v) part.side[v] = (best_side >> v) & 1u;
  r.solution.body = std::move(part);
  r.solution.score = best;
  r.num_optima = count;
  r.fingerprint = graph_fingerprint(g);
  return r;
}

std::vector<BinaryStateClass> enumerate_fixed_points(const ObjectiveSpec& spec,
                                                     const Graph& g) {
  if (g.n() > 16)
    throw std::invalid_argument("enumerate_fixed_points: instance too large (n > 16)");
  const auto adj = adjacency_masks(g);
  const Vertex n = g.n();
  const Problem problem = problem_of(spec);

  std::vector<BinaryStateClass> out;
  out.reserve(1u << n);
  std::vector<double> x(n);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    BinaryStateClass c;
    c.mask = mask;
    for (Vertex v = 0; v < n; ++v) {
      const bool on = mask & (1u << v);
      x[v] = problem == Problem::Mis ? (on ? 1.0 : 0.0) : (on ? 1.0 : -1.0);
    }
    const DenseEval eval = dense_reference(spec, g, x);

    if (problem == Problem::Mis) {
      c.independent = true;
      for (Vertex v = 0; v < n && c.independent; ++v)
        if ((mask & (1u << v)) && (adj[v] & mask)) c.independent = false;
      c.maximal = c.independent;
      for (Vertex v = 0; v < n && c.maximal; ++v)
        if (!(mask & (1u << v)) && !(adj[v] & mask)) c.maximal = false;
      c.score = c.independent ? std::popcount(mask) : -1;
      c.fixed = true;
      for (Vertex v = 0; v < n && c.fixed; ++v) {
        const bool on = mask & (1u << v);
        if (on ? eval.gradient[v] < 0.0 : eval.gradient[v] > 0.0) c.fixed = false;
      }
    } else {
      int64_t cut = 0;
      for (Vertex v = 0; v < n; ++v)
        cut += std::popcount(adj[v] & (((mask >> v) & 1u) ? ~mask : mask) &
                             ~((1u << v) - 1u) & ~(1u << v));
      // The expression above counts, for each v, higher-indexed neighbors
      // on the opposite side.
      c.score = cut;
      c.fixed = true;
      for (Vertex v = 0; v < n && c.fixed; ++v)
        if (x[v] * eval.gradient[v] < 0.0) c.fixed = false;
      for (Vertex v = 0; v < n && !c.one_flip_repairable; ++v) {
        const int on_side1 = std::popcount(adj[v] & mask);
        const int same = ((mask >> v) & 1u) ? on_side1 : g.degree(v) - on_side1;
        if (2 * same - g.degree(v) > 0) c.one_flip_repairable = true;
      }
    }
    out.push_back(c);
  }
  return out;
}

DenseEval dense_reference(const ObjectiveSpec& spec, const Graph& g,
                          std::span<const double> x) {
  if (g.n() > 256)
    throw std::invalid_argument("dense_reference: instance too large (n > 256)");
  if (static_cast<Vertex>(x.size()) != g.n())
    throw std::invalid_argument("dense_reference: dimension mismatch");
  const Vertex n = g.n();

  std::vector<double> dense(static_cast<size_t>(n) * n, 0.0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) dense[static_cast<size_t>(v) * n + u] = 1.0;

  std::vector<double> ax(n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    double acc = 0.0;
    for (Vertex u = 0; u < n; ++u) acc += dense[static_cast<size_t>(v) * n + u] * x[u];
    ax[v] = acc;
  }
  double x_ax = 0.0, x_sum = 0.0, x_sq = 0.0, x_dx = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    x_ax += x[v] * ax[v];
    x_sum += x[v];
    x_sq += x[v] * x[v];
    x_dx += static_cast<double>(g.degree(v)) * x[v] * x[v];
  }

  DenseEval eval;
  eval.gradient.resize(n);
  if (const auto* q = std::get_if<MisQubo>(&spec)) {
    eval.value = x_sum - 0.5 * q->gamma * x_ax;
    for (Vertex v = 0; v < n; ++v) eval.gradient[v] = 1.0 - q->gamma * ax[v];
  } else if (std::holds_alternative<Laplacian>(spec)) {
    eval.value = 0.25 * (x_dx - x_ax);
    for (Vertex v = 0; v < n; ++v)
      eval.gradient[v] = 0.5 * (static_cast<double>(g.degree(v)) * x[v] - ax[v]);
  } else if (const auto* p = std::get_if<PerturbedLaplacian>(&spec)) {
    eval.value = x_dx - x_ax + p->lambda * x_sq;
    for (Vertex v = 0; v < n; ++v)
      eval.gradient[v] =
          2.0 * (static_cast<double>(g.degree(v)) * x[v] - ax[v] + p->lambda * x[v]);
  } else if (std::holds_alternative<Adjacency>(spec)) {
    eval.value = -x_ax;
    for (Vertex v = 0; v < n; ++v) eval.gradient[v] = -2.0 * ax[v];
  } else {
    const auto& b = std::get<PerturbedBias>(spec);
    eval.value = -b.lambda * x_sum - x_ax;
    for (Vertex v = 0; v < n; ++v) eval.gradient[v] = -2.0 * ax[v] - b.lambda;
  }
  return eval;
}

}  // namespace mqo::oracle
