#pragma once

#include "mqo/pga.hpp"
#include "mqo/rng.hpp"

namespace mqo {

// Single-trajectory escapability probes: plain PGA, no resets, no local
// search, cut scored via the discrete partition.
struct EscapeRun {
  int64_t init_cut = 0;
  int64_t final_cut = 0;
  int iterations = 0;
  StopReason stop = StopReason::IterCap;
};

// Starts from the constant vector c * 1 (an interior stationary point of
// the Laplacian objective) and runs PGA on `spec`.
EscapeRun stationary_escape_run(const Graph& g, const ObjectiveSpec& spec, double c,
                                double alpha, int max_iters);

// Starts from the given binary partition (+-1 encoding) and runs PGA.
EscapeRun repairable_escape_run(const Graph& g, const ObjectiveSpec& spec,
                                std::span<const uint8_t> side, double alpha,
                                int max_iters);

// Uniform binary partition conditioned on being 1-flip repairable
// (rejection sampling against the exact detector).
std::vector<uint8_t> random_one_flip_repairable_state(const Graph& g, Rng& rng);

}  // namespace mqo
