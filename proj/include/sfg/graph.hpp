#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sfg {

using VertexId = std::uint32_t;

/// Distance reported by bfs_distances for vertices not reachable from the source.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Iterative edges are replaced at the next construction step; non-iterative edges are permanent.
enum class EdgeKind : std::uint8_t { Iterative, NonIterative };

enum class Role : std::uint8_t { Initial, Hub, Border, Ordinary };

enum class Model : std::uint8_t { Fractal, NonFractal };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeKind kind = EdgeKind::Iterative;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct VertexMeta {
  Role role = Role::Ordinary;
  int created_at = 0;

  friend bool operator==(const VertexMeta&, const VertexMeta&) = default;
};

/// Family and iteration a graph was generated as. Ad-hoc graphs carry no tag.
struct GraphTag {
  Model model = Model::Fractal;
  int level = 0;

  friend bool operator==(const GraphTag&, const GraphTag&) = default;
};

/// Immutable simple undirected graph with typed edges and per-vertex metadata.
///
/// Vertex ids are dense in [0, vertex_count). Edges are stored in insertion order with
/// u < v; adjacency lists are sorted ascending. Construction rejects self-loops,
/// parallel edges (regardless of kind) and out-of-range endpoints with UsageError.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<VertexMeta> meta = {},
        std::optional<GraphTag> tag = std::nullopt);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sorted neighbor ids of v. Throws UsageError when v is out of range.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  const VertexMeta& meta(VertexId v) const;
  std::span<const VertexMeta> all_meta() const noexcept { return meta_; }

  const std::optional<GraphTag>& tag() const noexcept { return tag_; }

  bool has_edge(VertexId u, VertexId v) const { return edge_kind(u, v).has_value(); }
  std::optional<EdgeKind> edge_kind(VertexId u, VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeKind>> adjacency_kinds_;
  std::vector<VertexMeta> meta_;
  std::optional<GraphTag> tag_;
};

struct InducedSubgraph {
  Graph graph;
  /// to_original[new_id] is the id of the same vertex in the source graph.
  std::vector<VertexId> to_original;
};

/// Subgraph induced by `keep` (duplicates ignored), renumbered in ascending original order.
/// Vertex metadata and edge kinds are carried over; the generation tag is dropped.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

/// Unweighted shortest-path distances from src; kUnreachable marks other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId src);

struct IsomorphismOptions {
  std::size_t max_vertices = 200;
};

/// True iff a bijection maps edges onto edges with matching kinds. Vertex metadata is
/// ignored. Throws CapabilityError above options.max_vertices.
bool isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

std::string_view to_string(EdgeKind kind);
std::string_view to_string(Role role);
std::string_view to_string(Model model);

std::optional<Role> parse_role(std::string_view text);
std::optional<Model> parse_model(std::string_view text);

}  // namespace sfg
