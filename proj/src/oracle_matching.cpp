#include <algorithm>
#include <unordered_map>

#include "oracle_detail.hpp"
#include "sfg/oracle.hpp"

namespace sfg {
namespace {

using detail::bit;
using detail::for_each_bit;
using detail::Mask;
using detail::Tally;

// Vertex branching: a vertex v is either unmatched or matched to one of its neighbours.
// The branches are disjoint, so optimal counts add across them. Components of the
// remaining vertex set are solved independently and memoised by their vertex mask.
class MatchingCounter {
 public:
  MatchingCounter(std::vector<Mask> adj, detail::Deadline& deadline)
      : adj_(std::move(adj)), deadline_(deadline) {}

  Tally solve(Mask mask) {
    Tally total = detail::unit_tally();
    Mask rest = mask;
    while (rest != 0) {
      const Mask comp = detail::component_of(detail::lowest(rest), rest, adj_);
      rest &= ~comp;
      if (detail::popcount(comp) == 1) continue;
      detail::combine(total, solve_component(comp));
    }
    return total;
  }

  /// Lists every maximum matching of G[mask], prefixed by `prefix`, until `out` holds `limit`.
  void enumerate(Mask mask, std::vector<std::pair<VertexId, VertexId>>& prefix,
                 std::vector<Witness>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    Mask live = 0;
    for_each_bit(mask, [&](VertexId v) {
      if (adj_[v] & mask) live |= bit(v);
    });
    if (live == 0) {
      Witness w;
      w.edges = prefix;
      std::sort(w.edges.begin(), w.edges.end());
      out.push_back(std::move(w));
      return;
    }
    const int best = solve(live).size;
    const VertexId v = detail::lowest(live);
    if (solve(live & ~bit(v)).size == best) enumerate(live & ~bit(v), prefix, out, limit);
    for_each_bit(adj_[v] & live, [&](VertexId u) {
      const Mask rest = live & ~bit(v) & ~bit(u);
      if (solve(rest).size + 1 != best) return;
      prefix.emplace_back(std::min(u, v), std::max(u, v));
      enumerate(rest, prefix, out, limit);
      prefix.pop_back();
    });
  }

  const std::vector<Mask>& adjacency() const { return adj_; }

 private:
  Tally solve_component(Mask comp) {
    if (detail::popcount(comp) == 2) return {1, 1};
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    deadline_.poll();

    // Fewest branches: minimum degree inside the component, lowest id on ties.
    VertexId pivot = detail::lowest(comp);
    int pivot_degree = 65;
    for_each_bit(comp, [&](VertexId v) {
      const int d = detail::popcount(adj_[v] & comp);
      if (d < pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    });

    Tally best = solve(comp & ~bit(pivot));
    for_each_bit(adj_[pivot] & comp, [&](VertexId u) {
      detail::merge_max(best, detail::shifted(solve(comp & ~bit(pivot) & ~bit(u)), 1));
    });
    memo_.emplace(comp, best);
    return best;
  }

  std::vector<Mask> adj_;
  detail::Deadline& deadline_;
  std::unordered_map<Mask, Tally> memo_;
};

// A saturated pin fixes its partner up front; each choice is one top-level branch.
struct Branch {
  Mask remaining;
  std::vector<std::pair<VertexId, VertexId>> fixed;
};

std::vector<Branch> pinned_branches(const std::vector<Mask>& adj, Mask base, Mask saturated) {
  std::vector<Branch> branches{{base, {}}};
  for_each_bit(saturated, [&](VertexId p) {
    std::vector<Branch> next;
    for (const Branch& br : branches) {
      if (!(br.remaining & bit(p))) {
        // Already covered by an edge between the two pinned vertices.
        next.push_back(br);
        continue;
      }
      for_each_bit(adj[p] & br.remaining, [&](VertexId u) {
        Branch child{br.remaining & ~bit(p) & ~bit(u), br.fixed};
        child.fixed.emplace_back(std::min(p, u), std::max(p, u));
        next.push_back(std::move(child));
      });
    }
    branches = std::move(next);
  });
  return branches;
}

}  // namespace

SolveResult max_matching(const Graph& g, const BoundaryConstraint& c, const OracleBudget& budget) {
  const auto pins = detail::validate_pins(g, Problem::Matching, c);
  detail::Deadline deadline(budget.max_time);
  MatchingCounter counter(detail::adjacency_masks(g, budget), deadline);

  const Mask base = detail::all_vertices(g.vertex_count()) & ~pins.unsaturated;
  const auto branches = pinned_branches(counter.adjacency(), base, pins.saturated);

  Tally best;
  std::vector<Tally> per_branch;
  for (const Branch& br : branches) {
    per_branch.push_back(
        detail::shifted(counter.solve(br.remaining), static_cast<int>(br.fixed.size())));
    detail::merge_max(best, per_branch.back());
  }

  std::vector<Witness> witnesses;
  if (best.feasible()) {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (per_branch[i].size != best.size) continue;
      auto prefix = branches[i].fixed;
      counter.enumerate(branches[i].remaining, prefix, witnesses, budget.max_witnesses);
    }
  }
  deadline.check();
  return detail::finish(best, std::move(witnesses));
}

}  // namespace sfg
