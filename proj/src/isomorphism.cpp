#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sfg/errors.hpp"
#include "sfg/graph.hpp"

namespace sfg {
namespace {

constexpr std::uint64_t kStepLimit = 50'000'000;

// Colour refinement run on the disjoint union of both graphs so that colour ids are
// comparable across them. Edge kinds take part in every signature.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  auto graph_of = [&](std::size_t i) -> const Graph& { return i < n ? a : b; };
  auto local = [&](std::size_t i) { return static_cast<VertexId>(i < n ? i : i - n); };

  std::vector<int> color(2 * n);
  {
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> sig(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      const Graph& g = graph_of(i);
      const VertexId v = local(i);
      int iterative = 0;
      for (VertexId w : g.neighbors(v)) {
        if (g.edge_kind(v, w) == EdgeKind::Iterative) ++iterative;
      }
      sig[i] = {iterative, static_cast<int>(g.degree(v)) - iterative};
      ids.emplace(sig[i], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t i = 0; i < 2 * n; ++i) color[i] = ids[sig[i]];
  }

  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(2 * n);
    std::map<Signature, int> ids;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      const Graph& g = graph_of(i);
      const VertexId v = local(i);
      const std::size_t offset = i < n ? 0 : n;
      sig[i].first = color[i];
      for (VertexId w : g.neighbors(v)) {
        sig[i].second.emplace_back(color[offset + w], static_cast<int>(*g.edge_kind(v, w)));
      }
      std::sort(sig[i].second.begin(), sig[i].second.end());
      ids.emplace(sig[i], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t i = 0; i < 2 * n; ++i) color[i] = ids[sig[i]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(n)),
          std::vector<int>(color.begin() + static_cast<std::ptrdiff_t>(n), color.end())};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> color_a, std::vector<int> color_b)
      : a_(a),
        b_(b),
        color_a_(std::move(color_a)),
        color_b_(std::move(color_b)),
        forward_(a.vertex_count(), kNone),
        backward_(b.vertex_count(), kNone) {
    build_order();
  }

  bool run() { return extend(0); }

 private:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  // BFS order per component, each component rooted in the rarest colour class.
  void build_order() {
    const std::size_t n = a_.vertex_count();
    std::map<int, int> class_size;
    for (int c : color_a_) ++class_size[c];
    std::vector<VertexId> roots(n);
    for (VertexId v = 0; v < n; ++v) roots[v] = v;
    std::stable_sort(roots.begin(), roots.end(), [&](VertexId x, VertexId y) {
      return class_size[color_a_[x]] < class_size[color_a_[y]];
    });
    std::vector<bool> seen(n, false);
    for (VertexId root : roots) {
      if (seen[root]) continue;
      seen[root] = true;
      const std::size_t start = order_.size();
      order_.push_back(root);
      for (std::size_t i = start; i < order_.size(); ++i) {
        for (VertexId w : a_.neighbors(order_[i])) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool consistent(VertexId v, VertexId w) const {
    if (color_a_[v] != color_b_[w] || backward_[w] != kNone) return false;
    std::size_t mapped_a = 0;
    for (VertexId u : a_.neighbors(v)) {
      if (forward_[u] == kNone) continue;
      ++mapped_a;
      const auto kind = b_.edge_kind(w, forward_[u]);
      if (!kind || *kind != *a_.edge_kind(v, u)) return false;
    }
    std::size_t mapped_b = 0;
    for (VertexId x : b_.neighbors(w)) {
      if (backward_[x] != kNone) ++mapped_b;
    }
    return mapped_a == mapped_b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++steps_ > kStepLimit) {
      throw CapabilityError("isomorphism search exceeded its step limit");
    }
    const VertexId v = order_[depth];

    VertexId anchor = kNone;
    for (VertexId u : a_.neighbors(v)) {
      if (forward_[u] != kNone) {
        anchor = forward_[u];
        break;
      }
    }
    auto try_candidate = [&](VertexId w) {
      if (!consistent(v, w)) return false;
      forward_[v] = w;
      backward_[w] = v;
      if (extend(depth + 1)) return true;
      forward_[v] = kNone;
      backward_[w] = kNone;
      return false;
    };
    if (anchor != kNone) {
      for (VertexId w : b_.neighbors(anchor)) {
        if (try_candidate(w)) return true;
      }
    } else {
      for (VertexId w = 0; w < b_.vertex_count(); ++w) {
        if (try_candidate(w)) return true;
      }
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> color_a_;
  std::vector<int> color_b_;
  std::vector<VertexId> forward_;
  std::vector<VertexId> backward_;
  std::vector<VertexId> order_;
  std::uint64_t steps_ = 0;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
  const std::size_t largest = std::max(a.vertex_count(), b.vertex_count());
  if (largest > options.max_vertices) {
    throw CapabilityError("isomorphism check limited to " + std::to_string(options.max_vertices) +
                          " vertices, got " + std::to_string(largest));
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

  auto [color_a, color_b] = refine_colors(a, b);
  std::vector<int> hist_a = color_a;
  std::vector<int> hist_b = color_b;
  std::sort(hist_a.begin(), hist_a.end());
  std::sort(hist_b.begin(), hist_b.end());
  if (hist_a != hist_b) return false;

  return Matcher(a, b, std::move(color_a), std::move(color_b)).run();
}

}  // namespace sfg
