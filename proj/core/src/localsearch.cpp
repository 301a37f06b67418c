#include "mqo/localsearch.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mqo {

TightnessTable build_tightness(const Graph& g, std::span<const Vertex> members) {
  TightnessTable t;
  t.selected_neighbors.assign(g.n(), 0);
  for (Vertex v : members)
    for (Vertex u : g.neighbors(v)) ++t.selected_neighbors[u];
  return t;
}

GainTable build_gain_table(const Graph& g, std::span<const uint8_t> side) {
  GainTable t;
  t.delta.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    int64_t same = 0;
    for (Vertex u : g.neighbors(v)) same += side[u] == side[v] ? 1 : -1;
    t.delta[v] = same;
  }
  return t;
}

void apply_flip(const Graph& g, std::vector<uint8_t>& side, GainTable& gains, Vertex v) {
  side[v] ^= 1;
  gains.delta[v] = -gains.delta[v];
  for (Vertex u : g.neighbors(v))
    gains.delta[u] += side[u] == side[v] ? 2 : -2;  // edge (u,v) switched cross/same
}

std::vector<Vertex> greedy_maximalize(const Graph& g, std::vector<Vertex> members) {
  if (!is_independent(g, members))
    throw std::invalid_argument("greedy_maximalize: input not independent");
  TightnessTable tight = build_tightness(g, members);
  std::vector<uint8_t> selected(g.n(), 0);
  for (Vertex v : members) selected[v] = 1;

  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!selected[v] && tight.selected_neighbors[v] == 0) free.push_back(v);
  std::sort(free.begin(), free.end(), [&](Vertex a, Vertex b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  for (Vertex v : free) {
    if (selected[v] || tight.selected_neighbors[v] != 0) continue;
    selected[v] = 1;
    members.push_back(v);
    for (Vertex u : g.neighbors(v)) ++tight.selected_neighbors[u];
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// First pair of non-adjacent 1-tight neighbors of v, in (u, w) ascending
// order. Candidates are unselected vertices whose unique selected
// neighbor is v itself.
std::optional<std::pair<Vertex, Vertex>> swap_pair_for(
    const Graph& g, Vertex v, const std::vector<uint8_t>& selected,
    const std::vector<int32_t>& tight) {
  std::vector<Vertex> candidates;
  for (Vertex u : g.neighbors(v))
    if (!selected[u] && tight[u] == 1) candidates.push_back(u);
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j)
      if (!g.has_edge(candidates[i], candidates[j]))
        return std::pair(candidates[i], candidates[j]);
  return std::nullopt;
}

void require_maximal_is(const Graph& g, std::span<const Vertex> members,
                        const std::vector<int32_t>& tight,
                        const std::vector<uint8_t>& selected) {
  if (!is_independent(g, members))
    throw std::invalid_argument("one_two_swap: input not an independent set");
  for (Vertex v = 0; v < g.n(); ++v)
    if (!selected[v] && tight[v] == 0)
      throw std::invalid_argument("one_two_swap: input not maximal");
}

}  // namespace

std::vector<Vertex> one_two_swap(const Graph& g, std::vector<Vertex> members) {
  std::vector<uint8_t> selected(g.n(), 0);
  for (Vertex v : members) selected[v] = 1;
  TightnessTable table = build_tightness(g, members);
  auto& tight = table.selected_neighbors;
  require_maximal_is(g, members, tight, selected);

  int64_t swaps = 0;
  bool applied = true;
  while (applied) {
    applied = false;
    for (Vertex v = 0; v < g.n() && !applied; ++v) {
      if (!selected[v]) continue;
      const auto pair = swap_pair_for(g, v, selected, tight);
      if (!pair) continue;

      const auto [u, w] = *pair;
      selected[v] = 0;
      for (Vertex z : g.neighbors(v)) --tight[z];
      for (Vertex add : {u, w}) {
        selected[add] = 1;
        for (Vertex z : g.neighbors(add)) ++tight[z];
      }

      // Removing v may have freed other neighbors; re-maximalize greedily
      // by ascending (degree, id).
      std::vector<Vertex> freed;
      for (Vertex z : g.neighbors(v))
        if (!selected[z] && tight[z] == 0) freed.push_back(z);
      std::sort(freed.begin(), freed.end(), [&](Vertex a, Vertex b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
      });
      for (Vertex z : freed) {
        if (selected[z] || tight[z] != 0) continue;
        selected[z] = 1;
        for (Vertex y : g.neighbors(z)) ++tight[y];
      }

      applied = true;
      ++swaps;
      assert(swaps <= g.n());
    }
  }

  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (selected[v]) out.push_back(v);
  assert(out.size() >= members.size());
  return out;
}

int64_t one_flip_pass(const Graph& g, std::vector<uint8_t>& side) {
  if (static_cast<Vertex>(side.size()) != g.n())
    throw std::invalid_argument("one_flip_pass: dimension mismatch");
  GainTable gains = build_gain_table(g, side);
  int64_t total = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (gains.delta[v] > 0) {
        total += gains.delta[v];
        apply_flip(g, side, gains, v);
        improved = true;
      }
    }
  }
  assert(total <= g.m());
  return total;
}

int64_t two_flip_pass(const Graph& g, std::vector<uint8_t>& side) {
  if (static_cast<Vertex>(side.size()) != g.n())
    throw std::invalid_argument("two_flip_pass: dimension mismatch");
  GainTable gains = build_gain_table(g, side);
  int64_t total = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Vertex u : g.neighbors(v)) {
        if (u <= v || side[u] == side[v]) continue;
        const int64_t joint = gains.delta[v] + gains.delta[u] + 2;
        if (joint > 0) {
          apply_flip(g, side, gains, v);
          apply_flip(g, side, gains, u);
          total += joint;
          improved = true;
        }
      }
    }
  }
  return total;
}

int64_t one_two_flip(const Graph& g, std::vector<uint8_t>& side) {
  int64_t total = 0;
  for (;;) {
    const int64_t round = one_flip_pass(g, side) + two_flip_pass(g, side);
    total += round;
    if (round == 0) return total;
  }
}

namespace {

int64_t local_gain(const Graph& g, const std::vector<uint8_t>& side, Vertex v) {
  int64_t same = 0;
  for (Vertex u : g.neighbors(v)) same += side[u] == side[v] ? 1 : -1;
  return same;
}

}  // namespace

std::optional<RepairWitness> detect_repairable(const Graph& g, const Solution& solution,
                                               RepairKind kind) {
  if (kind == RepairKind::OneTwoSwap) {
    const auto* is = std::get_if<IndependentSet>(&solution.body);
    if (!is) throw std::invalid_argument("detect_repairable: OneTwoSwap needs a MIS solution");
    std::vector<uint8_t> selected(g.n(), 0);
    for (Vertex v : is->members) selected[v] = 1;
    TightnessTable table = build_tightness(g, is->members);
    require_maximal_is(g, is->members, table.selected_neighbors, selected);
    for (Vertex v : is->members) {
      const auto pair = swap_pair_for(g, v, selected, table.selected_neighbors);
      if (pair) return RepairWitness{RepairKind::OneTwoSwap, v, pair->first, pair->second, 1};
    }
    return std::nullopt;
  }

  const auto* cut = std::get_if<CutPartition>(&solution.body);
  if (!cut) throw std::invalid_argument("detect_repairable: flip kinds need a cut solution");
  const auto& side = cut->side;
  if (static_cast<Vertex>(side.size()) != g.n())
    throw std::invalid_argument("detect_repairable: dimension mismatch");

  if (kind == RepairKind::OneFlip) {
    for (Vertex v = 0; v < g.n(); ++v) {
      const int64_t gain = local_gain(g, side, v);
      if (gain > 0) return RepairWitness{RepairKind::OneFlip, v, -1, -1, gain};
    }
    return std::nullopt;
  }

  // TwoFlip: adjacent opposite-side pair; gain recomputed as flip(v) then
  // flip(u) with v already moved.
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (u <= v || side[u] == side[v]) continue;
      int64_t gain = local_gain(g, side, v);
      int64_t same_u = 0;
      for (Vertex z : g.neighbors(u)) {
        const uint8_t side_z = z == v ? static_cast<uint8_t>(side[v] ^ 1) : side[z];
        same_u += side_z == side[u] ? 1 : -1;
      }
      gain += same_u;
      if (gain > 0) return RepairWitness{RepairKind::TwoFlip, v, u, -1, gain};
    }
  }
  return std::nullopt;
}

}  // namespace mqo
