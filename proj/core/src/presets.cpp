#include "mqo/presets.hpp"

#include <cmath>
#include <limits>

namespace mqo {

namespace {

struct Row {
  double n;
  double d;
  Preset preset;
};

// clang-format off
constexpr Row kMisRows[] = {
    {1000,   100,  {0.80, 0.30, 0.70, 60}},
    {1000,   300,  {0.80, 0.45, 0.70, 60}},
    {1000,   500,  {0.80, 0.45, 0.60, 60}},
    {3000,   100,  {0.80, 0.30, 0.60, 60}},
    {3000,   300,  {0.80, 0.45, 0.60, 60}},
    {3000,   1000, {0.80, 0.45, 0.50, 60}},
    {10000,  5000, {0.80, 0.75, 0.50, 60}},
    {20000, 10000, {0.80, 0.75, 0.50, 60}},
    {30000, 15000, {0.80, 0.75, 0.50, 60}},
};

constexpr Row kMaxCutRows[] = {
    {100,     50,  {0.0025, 0.90, 0.80, 90}},
    {1000,   100,  {0.0025, 0.80, 0.80, 90}},
    {1000,   500,  {0.0025, 0.80, 0.80, 90}},
    {1000,   800,  {0.0025, 0.80, 0.80, 90}},
    {30000, 15000, {5e-5,   0.80, 0.80, 90}},
    {30000, 24000, {5e-5,   0.80, 0.80, 90}},
    {40000, 20000, {5e-5,   0.80, 0.80, 90}},
    {40000, 32000, {5e-5,   0.80, 0.80, 90}},
};
// clang-format on

}  // namespace

Preset preset_for(Problem problem, Vertex n, double mean_degree) {
  const auto rows = problem == Problem::Mis ? std::span<const Row>(kMisRows)
                                            : std::span<const Row>(kMaxCutRows);
  const double ln = std::log(std::max(1.0, static_cast<double>(n)));
  const double ld = std::log(std::max(1.0, mean_degree));
  double best_dist = std::numeric_limits<double>::infinity();
  Preset best = rows[0].preset;
  for (const Row& row : rows) {
    const double dn = ln - std::log(row.n);
    const double dd = ld - std::log(row.d);
    const double dist = dn * dn + dd * dd;
    if (dist < best_dist) {
      best_dist = dist;
      best = row.preset;
    }
  }
  return best;
}

}  // namespace mqo
