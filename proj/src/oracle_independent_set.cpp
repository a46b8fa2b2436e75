#include <unordered_map>

#include "oracle_detail.hpp"
#include "sfg/oracle.hpp"

namespace sfg {
namespace {

using detail::bit;
using detail::for_each_bit;
using detail::Mask;
using detail::Tally;

// Branch on a maximum-degree vertex: either it joins the set (its closed neighbourhood
// leaves the graph) or it is discarded. Components are solved independently and every
// component result is memoised by its vertex mask.
class IndependentSetCounter {
 public:
  IndependentSetCounter(std::vector<Mask> adj, detail::Deadline& deadline)
      : adj_(std::move(adj)), deadline_(deadline) {}

  Tally solve(Mask mask) {
    Tally total = detail::unit_tally();
    Mask rest = mask;
    while (rest != 0) {
      const Mask comp = detail::component_of(detail::lowest(rest), rest, adj_);
      rest &= ~comp;
      detail::combine(total, solve_component(comp));
    }
    return total;
  }

  void enumerate(Mask mask, Mask chosen, std::vector<Witness>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (mask == 0) {
      out.push_back(detail::vertex_witness(chosen));
      return;
    }
    const int best = solve(mask).size;
    const VertexId v = detail::lowest(mask);
    const Mask without_closed = mask & ~adj_[v] & ~bit(v);
    if (solve(without_closed).size + 1 == best) {
      enumerate(without_closed, chosen | bit(v), out, limit);
    }
    if (solve(mask & ~bit(v)).size == best) enumerate(mask & ~bit(v), chosen, out, limit);
  }

  const std::vector<Mask>& adjacency() const { return adj_; }

 private:
  Tally solve_component(Mask comp) {
    const int n = detail::popcount(comp);
    if (n == 1) return {1, 1};
    if (n == 2) return {1, 2};
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    deadline_.poll();

    VertexId pivot = detail::lowest(comp);
    int pivot_degree = -1;
    for_each_bit(comp, [&](VertexId v) {
      const int d = detail::popcount(adj_[v] & comp);
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    });

    Tally best = detail::shifted(solve(comp & ~adj_[pivot] & ~bit(pivot)), 1);
    detail::merge_max(best, solve(comp & ~bit(pivot)));
    memo_.emplace(comp, best);
    return best;
  }

  std::vector<Mask> adj_;
  detail::Deadline& deadline_;
  std::unordered_map<Mask, Tally> memo_;
};

}  // namespace

SolveResult max_independent_set(const Graph& g, const BoundaryConstraint& c,
                                const OracleBudget& budget) {
  const auto pins = detail::validate_pins(g, Problem::IndependentSet, c);
  detail::Deadline deadline(budget.max_time);
  IndependentSetCounter counter(detail::adjacency_masks(g, budget), deadline);
  const auto& adj = counter.adjacency();

  Mask forced_out = pins.out;
  bool clash = false;
  for_each_bit(pins.in, [&](VertexId v) {
    if (adj[v] & pins.in) clash = true;
    forced_out |= adj[v];
  });
  if (clash || (forced_out & pins.in)) return {};

  const Mask remaining = detail::all_vertices(g.vertex_count()) & ~forced_out & ~pins.in;
  const Tally best =
      detail::shifted(counter.solve(remaining), detail::popcount(pins.in));

  std::vector<Witness> witnesses;
  counter.enumerate(remaining, pins.in, witnesses, budget.max_witnesses);
  deadline.check();
  return detail::finish(best, std::move(witnesses));
}

}  // namespace sfg
