#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mqo/graph.hpp"

namespace mqo {

enum class Problem { Mis, MaxCut };
enum class BoxDomain { Unit, Symmetric };  // [0,1]^n  /  [-1,1]^n

// The five relaxed quadratic formulations.
//
//   MisQubo             h(x)   = 1'x - (gamma/2) x'Ax      over [0,1]^n
//   Laplacian           f_L(x) = (1/4) x'Lx                over [-1,1]^n
//   PerturbedLaplacian  f_P(x) = x'(L + lambda I)x         over [-1,1]^n
//   Adjacency           f_A(x) = -x'Ax                     over [-1,1]^n
//   PerturbedBias       f_B(x) = -lambda 1'x - x'Ax        over [-1,1]^n
struct MisQubo {
  double gamma = 2.0;  // edge penalty, requires gamma > 1
};
struct Laplacian {};
struct PerturbedLaplacian {
  double lambda = 0.001;  // requires lambda > 0
};
struct Adjacency {};
struct PerturbedBias {
  double lambda = 0.001;  // requires lambda in (0, 2)
};

using ObjectiveSpec =
    std::variant<MisQubo, Laplacian, PerturbedLaplacian, Adjacency, PerturbedBias>;

Problem problem_of(const ObjectiveSpec& spec);
BoxDomain domain_of(const ObjectiveSpec& spec);
const char* objective_name(const ObjectiveSpec& spec);

// Throws std::invalid_argument if the parameters violate the constraints
// above (gamma <= 1, lambda <= 0, lambda >= 2).
void validate(const ObjectiveSpec& spec);

struct RelaxedState {
  std::vector<double> x;
  BoxDomain domain = BoxDomain::Unit;
};

double value(const ObjectiveSpec& spec, const Graph& g, const RelaxedState& state);
void gradient(const ObjectiveSpec& spec, const Graph& g, const RelaxedState& state,
              std::span<double> out);
std::vector<double> gradient(const ObjectiveSpec& spec, const Graph& g,
                             const RelaxedState& state);

// --- discrete solutions ------------------------------------------------

struct IndependentSet {
  std::vector<Vertex> members;  // sorted ascending
  bool operator==(const IndependentSet&) const = default;
};
struct CutPartition {
  std::vector<uint8_t> side;  // 1 = in S, 0 = in the complement
  bool operator==(const CutPartition&) const = default;
};

struct Solution {
  std::variant<IndependentSet, CutPartition> body;
  int64_t score = 0;  // |I| for MIS, Cut(S) for MaxCut
};

// Thresholding rules: MIS selects x_v > 0.5, MaxCut side x_v > 0. Ties
// resolve to not-selected / complement side. The score is recomputed from
// the graph; independence is not asserted (the state may be mid-flight).
Solution extract_solution(Problem problem, const Graph& g, const RelaxedState& state);

int64_t cut_value(const Graph& g, std::span<const uint8_t> side);
bool is_independent(const Graph& g, std::span<const Vertex> members);

int64_t score_solution(const Graph& g, const Solution& solution);

}  // namespace mqo
