#pragma once

#include <optional>
#include <span>

#include "mqo/objectives.hpp"

namespace mqo {

// Per-vertex count of selected neighbors, m_v = |N(v) ∩ I|.
struct TightnessTable {
  std::vector<int32_t> selected_neighbors;
};
TightnessTable build_tightness(const Graph& g, std::span<const Vertex> members);

// Per-vertex 1-flip gain: delta_v = (#same-side neighbors) - (#cross
// neighbors) = cut(after flipping v) - cut(before).
struct GainTable {
  std::vector<int64_t> delta;
};
GainTable build_gain_table(const Graph& g, std::span<const uint8_t> side);

// Flips v and incrementally updates the gain table. O(d(v)).
void apply_flip(const Graph& g, std::vector<uint8_t>& side, GainTable& gains, Vertex v);

// Adds free vertices (no selected neighbor) in ascending (degree, id)
// order until the set is maximal. Input must be independent.
std::vector<Vertex> greedy_maximalize(const Graph& g, std::vector<Vertex> members);

// Iterated (1,2)-swap: find v in I with two non-adjacent 1-tight
// neighbors u, w, replace v by {u, w}, greedily re-maximalize, repeat
// until no swap applies. Never shrinks the set; the result is maximal.
// Throws std::invalid_argument unless the input is a maximal IS.
std::vector<Vertex> one_two_swap(const Graph& g, std::vector<Vertex> members);

// Flips vertices with positive gain (ascending scan, first improvement,
// incremental table updates) until none remains. Returns the total cut
// gain; the cut never decreases.
int64_t one_flip_pass(const Graph& g, std::vector<uint8_t>& side);

// Scans edges with endpoints on opposite sides and applies the joint swap
// whenever delta_u + delta_v + 2 > 0 (the +2 corrects the double-counted
// shared edge). Returns the total cut gain.
int64_t two_flip_pass(const Graph& g, std::vector<uint8_t>& side);

// Alternates 1-flip and 2-flip passes until a full round yields no
// improvement. Returns the total cut gain.
int64_t one_two_flip(const Graph& g, std::vector<uint8_t>& side);

enum class RepairKind { OneTwoSwap, OneFlip, TwoFlip };

// A concrete improving move, lexicographically first in scan order.
// OneTwoSwap: remove `a`, insert {b, c}. OneFlip: flip `a`.
// TwoFlip: flip both endpoints of edge (a, b).
struct RepairWitness {
  RepairKind kind;
  Vertex a = -1;
  Vertex b = -1;
  Vertex c = -1;
  int64_t gain = 0;  // discrete score increase (flips only)
};

// Exact repairability detector per the definitions; gains are recomputed
// locally rather than taken from any incremental table, so this doubles
// as the oracle for the improvement procedures. Throws on kind/solution
// mismatch (and for OneTwoSwap on a non-maximal input).
std::optional<RepairWitness> detect_repairable(const Graph& g, const Solution& solution,
                                               RepairKind kind);

}  // namespace mqo
