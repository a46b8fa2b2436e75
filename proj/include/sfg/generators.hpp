#pragma once

#include <cstdint>
#include <utility>

#include "sfg/graph.hpp"

namespace sfg {

/// EdgeReplacement applies the local rewrite to every iterative edge; Merge glues four
/// copies of the previous level together at their boundary pairs.
enum class Method : std::uint8_t { EdgeReplacement, Merge };

struct ModelParams {
  int n = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

struct BuildOptions {
  /// Largest iteration index build() accepts. N_8 = 43,692 vertices.
  int max_level = 8;
};

/// Builds the n-th graph of the family.
///
/// Vertex ids are deterministic. The G_0 pair is 0 and 1 (Initial for the fractal family,
/// Hub for the non-fractal family) and the pair created by the first iteration is 2 and 3
/// (Hub, resp. Border). created_at is the iteration in which a vertex first appears, under
/// both methods. Throws UsageError for n < 0 and CapabilityError above options.max_level.
Graph build(Model model, int n, Method method, const BuildOptions& options = {});

/// Exact vertex and edge counts: N_n = 2(4^n + 2)/3, E_n = (4^(n+1) - 1)/3. Valid for 0 <= n <= 30.
ModelParams predicted_counts(int n);

/// The pair on which boundary classifications are defined: the two Initial vertices of a
/// fractal graph, the two Hub vertices of a non-fractal graph, in ascending id order.
/// Throws UsageError when the graph carries no generation tag or lacks the roles.
std::pair<VertexId, VertexId> boundary(const Graph& g);

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

}  // namespace sfg
