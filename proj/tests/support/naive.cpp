#include "naive.hpp"

#include <algorithm>
#include <vector>

namespace sfg::testing {
namespace {

void record(NaiveResult& r, std::uint32_t size, bool maximize) {
  if (!r.optimum || (maximize ? size > *r.optimum : size < *r.optimum)) {
    r.optimum = size;
    r.count = 1;
  } else if (size == *r.optimum) {
    ++r.count;
  }
}

bool pins_hold(const BoundaryConstraint& c, const std::vector<bool>& touched) {
  for (const Pin& p : c.pins) {
    switch (p.requirement) {
      case Requirement::Free: break;
      case Requirement::MustBeSaturated:
      case Requirement::MustBeIn:
        if (!touched[p.vertex]) return false;
        break;
      case Requirement::MustBeUnsaturated:
      case Requirement::MustBeOut:
        if (touched[p.vertex]) return false;
        break;
    }
  }
  return true;
}

void matchings(const Graph& g, const BoundaryConstraint& c, std::size_t next,
               std::vector<bool>& used, std::uint32_t size, NaiveResult& r) {
  const auto edges = g.edges();
  if (next == edges.size()) {
    if (pins_hold(c, used)) record(r, size, true);
    return;
  }
  matchings(g, c, next + 1, used, size, r);
  const Edge& e = edges[next];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = true;
    matchings(g, c, next + 1, used, size + 1, r);
    used[e.u] = used[e.v] = false;
  }
}

std::vector<bool> members(std::size_t n, std::uint64_t subset) {
  std::vector<bool> in(n);
  for (std::size_t v = 0; v < n; ++v) in[v] = (subset >> v) & 1U;
  return in;
}

bool independent(const Graph& g, const std::vector<bool>& in) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return in[e.u] && in[e.v]; });
}

bool dominating(const Graph& g, const std::vector<bool>& in) {
  std::vector<bool> covered = in;
  for (const Edge& e : g.edges()) {
    if (in[e.u]) covered[e.v] = true;
    if (in[e.v]) covered[e.u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

template <typename Accept>
NaiveResult subsets(const Graph& g, const BoundaryConstraint& c, bool maximize, Accept accept) {
  NaiveResult r;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto in = members(n, s);
    if (!pins_hold(c, in) || !accept(g, in)) continue;
    record(r, static_cast<std::uint32_t>(std::count(in.begin(), in.end(), true)), maximize);
  }
  return r;
}

}  // namespace

NaiveResult naive_matching(const Graph& g, const BoundaryConstraint& c) {
  NaiveResult r;
  std::vector<bool> used(g.vertex_count(), false);
  matchings(g, c, 0, used, 0, r);
  return r;
}

NaiveResult naive_independent_set(const Graph& g, const BoundaryConstraint& c) {
  return subsets(g, c, true, independent);
}

NaiveResult naive_dominating_set(const Graph& g, const BoundaryConstraint& c) {
  return subsets(g, c, false, dominating);
}

NaiveResult naive_solve(const Graph& g, Problem problem, const BoundaryConstraint& c) {
  switch (problem) {
    case Problem::Matching: return naive_matching(g, c);
    case Problem::IndependentSet: return naive_independent_set(g, c);
    case Problem::DominatingSet: return naive_dominating_set(g, c);
  }
  return {};
}

bool valid_witness(const Graph& g, Problem problem, const BoundaryConstraint& c, const Witness& w,
                   std::uint32_t size) {
  std::vector<bool> touched(g.vertex_count(), false);
  if (problem == Problem::Matching) {
    if (w.edges.size() != size || !w.vertices.empty()) return false;
    for (const auto& [u, v] : w.edges) {
      if (u >= v || !g.has_edge(u, v) || touched[u] || touched[v]) return false;
      touched[u] = touched[v] = true;
    }
    return pins_hold(c, touched);
  }
  if (w.vertices.size() != size || !w.edges.empty()) return false;
  for (VertexId v : w.vertices) {
    if (v >= g.vertex_count() || touched[v]) return false;
    touched[v] = true;
  }
  const bool ok = problem == Problem::IndependentSet ? independent(g, touched) : dominating(g, touched);
  return ok && pins_hold(c, touched);
}

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, double p_low, double p_high) {
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  std::uniform_real_distribution<double> density(p_low, p_high);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t n = size(rng);
  const double p = density(rng);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng) < p) {
        edges.push_back({u, v, coin(rng) < 0.5 ? EdgeKind::Iterative : EdgeKind::NonIterative});
      }
    }
  }
  return Graph(n, std::move(edges));
}

BoundaryConstraint random_constraint(std::mt19937_64& rng, const Graph& g, Problem problem) {
  const std::size_t n = g.vertex_count();
  std::uniform_int_distribution<int> pins(0, n >= 2 ? 2 : 1);
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<int> side(0, 1);
  const Requirement yes =
      problem == Problem::Matching ? Requirement::MustBeSaturated : Requirement::MustBeIn;
  const Requirement no =
      problem == Problem::Matching ? Requirement::MustBeUnsaturated : Requirement::MustBeOut;
  BoundaryConstraint c;
  const int k = pins(rng);
  while (static_cast<int>(c.pins.size()) < k) {
    const VertexId v = vertex(rng);
    if (!c.pins.empty() && c.pins.front().vertex == v) continue;
    c.pins.push_back({v, side(rng) ? yes : no});
  }
  return c;
}

}  // namespace sfg::testing
