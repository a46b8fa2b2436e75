#include "sfg/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sfg/errors.hpp"

namespace sfg {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<VertexMeta> meta,
             std::optional<GraphTag> tag)
    : edges_(std::move(edges)),
      adjacency_(vertex_count),
      adjacency_kinds_(vertex_count),
      meta_(std::move(meta)),
      tag_(tag) {
  if (meta_.empty()) meta_.resize(vertex_count);
  if (meta_.size() != vertex_count) {
    throw UsageError("vertex metadata has " + std::to_string(meta_.size()) + " entries for " +
                     std::to_string(vertex_count) + " vertices");
  }
  for (Edge& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw UsageError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside [0," + std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) throw UsageError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw UsageError("parallel edges at vertex " + std::to_string(v));
    }
    adjacency_kinds_[v].resize(nbrs.size());
  }
  for (const Edge& e : edges_) {
    auto place = [this](VertexId from, VertexId to, EdgeKind kind) {
      const auto& nbrs = adjacency_[from];
      const auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), to) - nbrs.begin();
      adjacency_kinds_[from][static_cast<std::size_t>(pos)] = kind;
    };
    place(e.u, e.v, e.kind);
    place(e.v, e.u, e.kind);
  }
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(vertex_count()) + ")");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

const VertexMeta& Graph::meta(VertexId v) const {
  check_vertex(v);
  return meta_[v];
}

std::optional<EdgeKind> Graph::edge_kind(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adjacency_[u];
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return adjacency_kinds_[u][static_cast<std::size_t>(it - nbrs.begin())];
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (!kept.empty() && kept.back() >= g.vertex_count()) {
    throw UsageError("induced_subgraph: vertex " + std::to_string(kept.back()) + " out of range");
  }

  constexpr VertexId kDropped = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(g.vertex_count(), kDropped);
  std::vector<VertexMeta> meta;
  meta.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    remap[kept[i]] = static_cast<VertexId>(i);
    meta.push_back(g.meta(kept[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != kDropped && remap[e.v] != kDropped) {
      edges.push_back({remap[e.u], remap[e.v], e.kind});
    }
  }
  return {Graph(kept.size(), std::move(edges), std::move(meta)), std::move(kept)};
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId src) {
  if (src >= g.vertex_count()) {
    throw UsageError("bfs_distances: source " + std::to_string(src) + " out of range");
  }
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::Iterative ? "I" : "N";
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Initial: return "initial";
    case Role::Hub: return "hub";
    case Role::Border: return "border";
    case Role::Ordinary: return "ordinary";
  }
  return "ordinary";
}

std::string_view to_string(Model model) {
  return model == Model::Fractal ? "fractal" : "nonfractal";
}

std::optional<Role> parse_role(std::string_view text) {
  if (text == "initial") return Role::Initial;
  if (text == "hub") return Role::Hub;
  if (text == "border") return Role::Border;
  if (text == "ordinary") return Role::Ordinary;
  return std::nullopt;
}

std::optional<Model> parse_model(std::string_view text) {
  if (text == "fractal") return Model::Fractal;
  if (text == "nonfractal") return Model::NonFractal;
  return std::nullopt;
}

}  // namespace sfg
