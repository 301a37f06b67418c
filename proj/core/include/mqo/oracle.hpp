#pragma once

#include <optional>
#include <string>

#include "mqo/objectives.hpp"

// Brute-force reference results. Everything here is deliberately naive
// and lives behind hard size guards; none of it shares code with the
// solver path, so it can serve as an independent oracle for it.
namespace mqo::oracle {

struct ExactResult {
  int64_t optimum = 0;
  Solution solution;
  std::optional<uint64_t> num_optima;
  std::string fingerprint;  // hash of (n, m, edge list)
};

std::string graph_fingerprint(const Graph& g);

// Branch-and-bound maximum independent set. Guarded at n <= 26.
ExactResult exact_mis(const Graph& g);

// Exhaustive maximum cut via Gray-code partition scan. Guarded at n <= 24.
ExactResult exact_maxcut(const Graph& g);

// Per-state classification over all 2^n binary assignments (n <= 16).
struct BinaryStateClass {
  uint32_t mask = 0;      // bit v set = selected (MIS) or side S (MaxCut)
  bool fixed = false;     // PGA fixed point per the sign condition
  int64_t score = 0;      // |I| if independent else -1 (MIS); cut (MaxCut)
  bool independent = false;      // MIS only
  bool maximal = false;          // MIS only
  bool one_flip_repairable = false;  // MaxCut only
};
std::vector<BinaryStateClass> enumerate_fixed_points(const ObjectiveSpec& spec,
                                                     const Graph& g);

// Value and gradient through an explicitly materialized dense adjacency
// matrix (n <= 256). Numeric mirror of the sparse objective module.
struct DenseEval {
  double value = 0.0;
  std::vector<double> gradient;
};
DenseEval dense_reference(const ObjectiveSpec& spec, const Graph& g,
                          std::span<const double> x);

}  // namespace mqo::oracle
