#include "mqo/objectives.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqo {

Problem problem_of(const ObjectiveSpec& spec) {
  return std::holds_alternative<MisQubo>(spec) ? Problem::Mis : Problem::MaxCut;
}

BoxDomain domain_of(const ObjectiveSpec& spec) {
  return problem_of(spec) == Problem::Mis ? BoxDomain::Unit : BoxDomain::Symmetric;
}

const char* objective_name(const ObjectiveSpec& spec) {
  struct Named {
    const char* operator()(const MisQubo&) const { return "mis-qubo"; }
    const char* operator()(const Laplacian&) const { return "laplacian"; }
    const char* operator()(const PerturbedLaplacian&) const { return "perturbed-laplacian"; }
    const char* operator()(const Adjacency&) const { return "adjacency"; }
    const char* operator()(const PerturbedBias&) const { return "perturbed-bias"; }
  };
  return std::visit(Named{}, spec);
}

void validate(const ObjectiveSpec& spec) {
  if (const auto* q = std::get_if<MisQubo>(&spec)) {
    if (!(q->gamma > 1.0))
      throw std::invalid_argument("mis-qubo: gamma must be > 1");
  } else if (const auto* p = std::get_if<PerturbedLaplacian>(&spec)) {
    if (!(p->lambda > 0.0))
      throw std::invalid_argument("perturbed-laplacian: lambda must be > 0");
  } else if (const auto* b = std::get_if<PerturbedBias>(&spec)) {
    if (!(b->lambda > 0.0 && b->lambda < 2.0))
      throw std::invalid_argument("perturbed-bias: lambda must be in (0, 2)");
  }
}

namespace {

void check_state(const ObjectiveSpec& spec, const Graph& g, const RelaxedState& state) {
  if (static_cast<Vertex>(state.x.size()) != g.n())
    throw std::invalid_argument("objective: state dimension mismatch");
  if (state.domain != domain_of(spec))
    throw std::invalid_argument("objective: state domain does not match objective");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double sum(std::span<const double> a) {
  double acc = 0.0;
  for (double v : a) acc += v;
  return acc;
}

// x'Ax in O(m), via one adjacency action.
double quad_adjacency(const Graph& g, std::span<const double> x,
                      std::vector<double>& scratch) {
  scratch.resize(x.size());
  g.adjacency_apply(x, scratch);
  return dot(x, scratch);
}

// x'Lx = sum over edges of (x_u - x_v)^2; exactly zero on constants.
double quad_laplacian(const Graph& g, std::span<const double> x) {
  double acc = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const double xv = x[v];
    for (Vertex u : g.neighbors(v)) {
      if (u > v) {
        const double d = xv - x[u];
        acc += d * d;
      }
    }
  }
  return acc;
}

}  // namespace

double value(const ObjectiveSpec& spec, const Graph& g, const RelaxedState& state) {
  check_state(spec, g, state);
  std::vector<double> scratch;
  const std::span<const double> x(state.x);
  if (const auto* q = std::get_if<MisQubo>(&spec))
    return sum(x) - 0.5 * q->gamma * quad_adjacency(g, x, scratch);
  if (std::holds_alternative<Laplacian>(spec)) return 0.25 * quad_laplacian(g, x);
  if (const auto* p = std::get_if<PerturbedLaplacian>(&spec))
    return quad_laplacian(g, x) + p->lambda * dot(x, x);
  if (std::holds_alternative<Adjacency>(spec))
    return -quad_adjacency(g, x, scratch);
  const auto& b = std::get<PerturbedBias>(spec);
  return -b.lambda * sum(x) - quad_adjacency(g, x, scratch);
}

void gradient(const ObjectiveSpec& spec, const Graph& g, const RelaxedState& state,
              std::span<double> out) {
  check_state(spec, g, state);
  if (out.size() != state.x.size())
    throw std::invalid_argument("gradient: output dimension mismatch");
  const std::span<const double> x(state.x);
  const Vertex n = g.n();

  if (const auto* q = std::get_if<MisQubo>(&spec)) {
    g.adjacency_apply(x, out);  // grad h = 1 - gamma * Ax
    for (Vertex v = 0; v < n; ++v) out[v] = 1.0 - q->gamma * out[v];
    return;
  }
  if (std::holds_alternative<Laplacian>(spec)) {
    g.laplacian_apply(x, out);  // grad f_L = (1/2) Lx
    for (Vertex v = 0; v < n; ++v) out[v] *= 0.5;
    return;
  }
  if (const auto* p = std::get_if<PerturbedLaplacian>(&spec)) {
    // grad f_P = 2 (L + lambda I) x, assembled as D x - A x + lambda x.
    g.adjacency_apply(x, out);
    for (Vertex v = 0; v < n; ++v)
      out[v] = 2.0 * (static_cast<double>(g.degree(v)) * x[v] - out[v] + p->lambda * x[v]);
    return;
  }
  if (std::holds_alternative<Adjacency>(spec)) {
    g.adjacency_apply(x, out);  // grad f_A = -2 Ax
    for (Vertex v = 0; v < n; ++v) out[v] *= -2.0;
    return;
  }
  const auto& b = std::get<PerturbedBias>(spec);  // grad f_B = -2 Ax - lambda 1
  g.adjacency_apply(x, out);
  for (Vertex v = 0; v < n; ++v) out[v] = -2.0 * out[v] - b.lambda;
}

std::vector<double> gradient(const ObjectiveSpec& spec, const Graph& g,
                             const RelaxedState& state) {
  std::vector<double> out(state.x.size());
  gradient(spec, g, state, out);
  return out;
}

Solution extract_solution(Problem problem, const Graph& g, const RelaxedState& state) {
  if (static_cast<Vertex>(state.x.size()) != g.n())
    throw std::invalid_argument("extract_solution: dimension mismatch");
  Solution sol;
  if (problem == Problem::Mis) {
    IndependentSet is;
    for (Vertex v = 0; v < g.n(); ++v)
      if (state.x[v] > 0.5) is.members.push_back(v);
    sol.score = static_cast<int64_t>(is.members.size());
    sol.body = std::move(is);
  } else {
    CutPartition cut;
    cut.side.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) cut.side[v] = state.x[v] > 0.0 ? 1 : 0;
    sol.score = cut_value(g, cut.side);
    sol.body = std::move(cut);
  }
  return sol;
}

int64_t cut_value(const Graph& g, std::span<const uint8_t> side) {
  if (static_cast<Vertex>(side.size()) != g.n())
    throw std::invalid_argument("cut_value: dimension mismatch");
  int64_t crossing = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u && side[v] != side[u]) ++crossing;
  return crossing;
}

bool is_independent(const Graph& g, std::span<const Vertex> members) {
  std::vector<uint8_t> in(g.n(), 0);
  for (Vertex v : members) in[v] = 1;
  for (Vertex v : members)
    for (Vertex u : g.neighbors(v))
      if (in[u]) return false;
  return true;
}

int64_t score_solution(const Graph& g, const Solution& solution) {
  if (const auto* is = std::get_if<IndependentSet>(&solution.body))
    return static_cast<int64_t>(is->members.size());
  return cut_value(g, std::get<CutPartition>(solution.body).side);
}

}  // namespace mqo
