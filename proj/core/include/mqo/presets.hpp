#pragma once

#include "mqo/objectives.hpp"

namespace mqo {

// Tuned optimizer/reset settings per problem and instance shape.
struct Preset {
  double alpha = 0.8;
  double momentum = 0.0;
  double rho = 0.5;
  int reset_rounds = 60;
};

// Nearest built-in row by (log n, log mean-degree) distance. Explicit
// flags always override the chosen row.
Preset preset_for(Problem problem, Vertex n, double mean_degree);

}  // namespace mqo
