#include "mqo/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqo {

Graph Graph::from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: vertex index out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop rejected");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<int64_t>(edges.size());
  g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.neighbors_.resize(static_cast<size_t>(2) * g.m_);
  std::vector<int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v)
    std::sort(g.neighbors_.begin() + g.offsets_[v],
              g.neighbors_.begin() + g.offsets_[v + 1]);

  for (Vertex v = 0; v < n; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  g.check_invariants();
  return g;
}

void Graph::check_invariants() const {
  int64_t degree_sum = 0;
  for (Vertex v = 0; v < n_; ++v) {
    const auto nbrs = neighbors(v);
    degree_sum += static_cast<int64_t>(nbrs.size());
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v) throw std::logic_error("graph: self-loop");
      if (i > 0 && nbrs[i - 1] >= nbrs[i])
        throw std::logic_error("graph: neighbor list not strictly ascending");
    }
  }
  if (degree_sum != 2 * m_) throw std::logic_error("graph: degree sum != 2m");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::adjacency_apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<Vertex>(x.size()) != n_ || static_cast<Vertex>(y.size()) != n_)
    throw std::invalid_argument("adjacency_apply: dimension mismatch");
  for (Vertex v = 0; v < n_; ++v) {
    double acc = 0.0;
    for (Vertex u : neighbors(v)) acc += x[u];
    y[v] = acc;
  }
}

std::vector<double> Graph::adjacency_apply(std::span<const double> x) const {
  std::vector<double> y(n_);
  adjacency_apply(x, y);
  return y;
}

void Graph::laplacian_apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<Vertex>(x.size()) != n_ || static_cast<Vertex>(y.size()) != n_)
    throw std::invalid_argument("laplacian_apply: dimension mismatch");
  for (Vertex v = 0; v < n_; ++v) {
    double acc = 0.0;
    const double xv = x[v];
    for (Vertex u : neighbors(v)) acc += xv - x[u];
    y[v] = acc;
  }
}

std::vector<double> Graph::laplacian_apply(std::span<const double> x) const {
  std::vector<double> y(n_);
  laplacian_apply(x, y);
  return y;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex u : neighbors(v))
      if (v < u) out.emplace_back(v, u);
  return out;
}

namespace {

Graph generate_er(const ErSpec& er, uint64_t seed) {
  if (er.n < 0) throw std::invalid_argument("er: negative n");
  if (er.p < 0.0 || er.p > 1.0) throw std::invalid_argument("er: p outside [0,1]");
  Rng rng(derive_seed(seed, 0x45521ULL));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < er.n; ++u)
    for (Vertex v = u + 1; v < er.n; ++v)
      if (rng.bernoulli(er.p)) edges.emplace_back(u, v);
  return Graph::from_edges(er.n, std::move(edges));
}

Graph generate_ba(const BaSpec& ba, uint64_t seed) {
  if (ba.m_attach < 1) throw std::invalid_argument("ba: m_attach must be >= 1");
  if (ba.m_attach >= ba.n) throw std::invalid_argument("ba: m_attach must be < n");
  Rng rng(derive_seed(seed, 0xBAULL));
  // Seed core: star over the first m_attach + 1 nodes, then preferential
  // attachment via the repeated-endpoints list.
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> endpoints;
  for (Vertex v = 1; v <= ba.m_attach; ++v) {
    edges.emplace_back(0, v);
    endpoints.push_back(0);
    endpoints.push_back(v);
  }
  std::vector<Vertex> targets;
  for (Vertex v = ba.m_attach + 1; v < ba.n; ++v) {
    targets.clear();
    while (static_cast<Vertex>(targets.size()) < ba.m_attach) {
      const Vertex t = endpoints[rng.uniform_index(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (Vertex t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(ba.n, std::move(edges));
}

Graph generate_sbm(const SbmSpec& sbm, uint64_t seed) {
  if (sbm.k < 1) throw std::invalid_argument("sbm: k must be >= 1");
  if (sbm.p_in < 0.0 || sbm.p_in > 1.0 || sbm.p_out < 0.0 || sbm.p_out > 1.0)
    throw std::invalid_argument("sbm: probabilities outside [0,1]");
  if (sbm.p_in <= sbm.p_out)
    throw std::invalid_argument("sbm: requires p_in > p_out");
  Rng rng(derive_seed(seed, 0x5B3ULL));
  // Vertex v belongs to block v * k / n (contiguous near-equal blocks).
  auto block = [&](Vertex v) {
    return static_cast<int>((static_cast<int64_t>(v) * sbm.k) / sbm.n);
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < sbm.n; ++u)
    for (Vertex v = u + 1; v < sbm.n; ++v)
      if (rng.bernoulli(block(u) == block(v) ? sbm.p_in : sbm.p_out))
        edges.emplace_back(u, v);
  return Graph::from_edges(sbm.n, std::move(edges));
}

}  // namespace

Graph generate(const GraphGenSpec& spec) {
  return std::visit(
      [&](const auto& kind) -> Graph {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, ErSpec>) return generate_er(kind, spec.seed);
        if constexpr (std::is_same_v<T, BaSpec>) return generate_ba(kind, spec.seed);
        if constexpr (std::is_same_v<T, SbmSpec>) return generate_sbm(kind, spec.seed);
      },
      spec.kind);
}

StripResult strip_isolated(const Graph& g) {
  StripResult r;
  r.orig_to_core.assign(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      r.removed.push_back(v);
    } else {
      r.orig_to_core[v] = static_cast<Vertex>(r.core_to_orig.size());
      r.core_to_orig.push_back(v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<size_t>(g.m()));
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) edges.emplace_back(r.orig_to_core[v], r.orig_to_core[u]);
  r.core = Graph::from_edges(static_cast<Vertex>(r.core_to_orig.size()), std::move(edges));
  return r;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    stack.push_back(s);
    std::vector<Vertex> comp;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace mqo
