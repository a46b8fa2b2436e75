#include "sfg/generators.hpp"

#include <string>
#include <vector>

#include "sfg/errors.hpp"

namespace sfg {
namespace {

struct Roles {
  Role boundary;
  Role secondary;
};

Roles roles_for(Model model) {
  return model == Model::Fractal ? Roles{Role::Initial, Role::Hub} : Roles{Role::Hub, Role::Border};
}

Graph build_by_replacement(Model model, int n) {
  const Roles roles = roles_for(model);
  std::vector<VertexMeta> meta{{roles.boundary, 0}, {roles.boundary, 0}};
  std::vector<Edge> edges{{0, 1, EdgeKind::Iterative}};

  for (int step = 1; step <= n; ++step) {
    std::vector<Edge> next;
    next.reserve(edges.size() * 5);
    for (const Edge& e : edges) {
      if (e.kind == EdgeKind::NonIterative) {
        next.push_back(e);
        continue;
      }
      const auto a = static_cast<VertexId>(meta.size());
      const auto b = a + 1;
      const Role role = step == 1 ? roles.secondary : Role::Ordinary;
      meta.push_back({role, step});
      meta.push_back({role, step});
      next.push_back({e.u, a, EdgeKind::Iterative});
      next.push_back({a, e.v, EdgeKind::Iterative});
      next.push_back({e.u, b, EdgeKind::Iterative});
      next.push_back({b, e.v, EdgeKind::Iterative});
      if (model == Model::Fractal) {
        next.push_back({a, b, EdgeKind::NonIterative});
      } else {
        next.push_back({e.u, e.v, EdgeKind::NonIterative});
      }
    }
    edges = std::move(next);
  }
  const std::size_t count = meta.size();
  return Graph(count, std::move(edges), std::move(meta), GraphTag{model, n});
}

// Level k+1 from four copies of level k. With X, Y the boundary pair of a copy:
//   copy 1: X -> X, Y -> W     copy 2: X -> W, Y -> Y
//   copy 3: X -> X, Y -> Z     copy 4: X -> Z, Y -> Y
// then W-Z (fractal) or X-Y (non-fractal) is joined by a non-iterative edge.
Graph build_by_merge(Model model, int n) {
  const Roles roles = roles_for(model);
  constexpr VertexId X = 0, Y = 1, W = 2, Z = 3;

  std::vector<VertexMeta> meta{{roles.boundary, 0}, {roles.boundary, 0}};
  std::vector<Edge> edges{{X, Y, EdgeKind::Iterative}};

  for (int level = 1; level <= n; ++level) {
    constexpr VertexId kGlue[4][2] = {{X, W}, {W, Y}, {X, Z}, {Z, Y}};
    std::vector<VertexMeta> next_meta{
        {roles.boundary, 0}, {roles.boundary, 0}, {roles.secondary, 1}, {roles.secondary, 1}};
    std::vector<Edge> next_edges;
    next_edges.reserve(4 * edges.size() + 1);

    for (const auto& glue : kGlue) {
      std::vector<VertexId> image(meta.size());
      for (VertexId v = 0; v < meta.size(); ++v) {
        if (v == X || v == Y) {
          image[v] = glue[v];
          continue;
        }
        // Interior vertices of a copy were created one iteration later in the glued graph.
        image[v] = static_cast<VertexId>(next_meta.size());
        next_meta.push_back({Role::Ordinary, meta[v].created_at + 1});
      }
      for (const Edge& e : edges) next_edges.push_back({image[e.u], image[e.v], e.kind});
    }
    if (model == Model::Fractal) {
      next_edges.push_back({W, Z, EdgeKind::NonIterative});
    } else {
      next_edges.push_back({X, Y, EdgeKind::NonIterative});
    }
    meta = std::move(next_meta);
    edges = std::move(next_edges);
  }
  const std::size_t count = meta.size();
  return Graph(count, std::move(edges), std::move(meta), GraphTag{model, n});
}

}  // namespace

Graph build(Model model, int n, Method method, const BuildOptions& options) {
  if (n < 0) throw UsageError("iteration index must be nonnegative, got " + std::to_string(n));
  if (n > options.max_level) {
    throw CapabilityError("iteration " + std::to_string(n) + " exceeds the generator cap of " +
                          std::to_string(options.max_level));
  }
  return method == Method::EdgeReplacement ? build_by_replacement(model, n)
                                           : build_by_merge(model, n);
}

ModelParams predicted_counts(int n) {
  if (n < 0 || n > 30) {
    throw UsageError("predicted_counts supports 0 <= n <= 30, got " + std::to_string(n));
  }
  const std::uint64_t four_n = std::uint64_t{1} << (2 * n);
  return {n, 2 * (four_n + 2) / 3, (4 * four_n - 1) / 3};
}

std::pair<VertexId, VertexId> boundary(const Graph& g) {
  if (!g.tag()) throw UsageError("boundary: graph carries no generation tag");
  const Role wanted = roles_for(g.tag()->model).boundary;
  std::vector<VertexId> found;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.meta(v).role == wanted) found.push_back(v);
  }
  if (found.size() != 2) {
    throw UsageError("boundary: expected exactly two " + std::string(to_string(wanted)) +
                     " vertices, found " + std::to_string(found.size()));
  }
  return {found[0], found[1]};
}

std::string_view to_string(Method method) {
  return method == Method::EdgeReplacement ? "replace" : "merge";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "replace") return Method::EdgeReplacement;
  if (text == "merge") return Method::Merge;
  return std::nullopt;
}

}  // namespace sfg
