#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "oracle_detail.hpp"
#include "sfg/errors.hpp"
#include "sfg/oracle.hpp"

namespace sfg {
namespace {

using detail::bit;
using detail::for_each_bit;
using detail::Mask;
using detail::Tally;

// A subproblem: pick the fewest vertices of U whose closed neighbourhoods cover D.
struct State {
  Mask candidates;
  Mask undominated;

  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    return std::hash<Mask>{}(s.candidates * 0x9E3779B97F4A7C15ULL ^ s.undominated);
  }
};

class DominationCounter {
 public:
  DominationCounter(std::vector<Mask> closed, detail::Deadline& deadline)
      : closed_(std::move(closed)), deadline_(deadline) {}

  Tally solve(State s) {
    if (s.undominated == 0) return detail::unit_tally();
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    deadline_.poll();
    const Tally result = reduce_and_split(s);
    memo_.emplace(s, result);
    return result;
  }

  void enumerate(State s, Mask chosen, std::vector<Witness>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (s.undominated == 0) {
      out.push_back(detail::vertex_witness(chosen));
      return;
    }
    const Tally best = solve(s);
    if (!best.feasible()) return;
    const VertexId w = most_constrained(s);
    const VertexId c = detail::lowest(closed_[w] & s.candidates);
    const State in{s.candidates & ~bit(c), s.undominated & ~closed_[c]};
    const Tally take = solve(in);
    if (take.feasible() && take.size + 1 == best.size) enumerate(in, chosen | bit(c), out, limit);
    const State skip{s.candidates & ~bit(c), s.undominated};
    const Tally leave = solve(skip);
    if (leave.feasible() && leave.size == best.size) enumerate(skip, chosen, out, limit);
  }

 private:
  // Undominated vertex with the fewest remaining candidates.
  VertexId most_constrained(const State& s) const {
    VertexId pick = detail::lowest(s.undominated);
    int fewest = 65;
    for_each_bit(s.undominated, [&](VertexId w) {
      const int k = detail::popcount(closed_[w] & s.candidates);
      if (k < fewest) {
        fewest = k;
        pick = w;
      }
    });
    return pick;
  }

  Tally reduce_and_split(State s) {
    int forced = 0;
    bool changed = true;
    while (changed && s.undominated != 0) {
      changed = false;
      // A candidate that dominates nothing new never appears in a minimum set.
      for_each_bit(s.candidates, [&](VertexId u) {
        if ((closed_[u] & s.undominated) == 0) s.candidates &= ~bit(u);
      });
      Mask done = 0;
      for_each_bit(s.undominated, [&](VertexId w) {
        if (done & bit(w)) return;
        const Mask cand = closed_[w] & s.candidates;
        if (cand == 0) {
          forced = -1;
          return;
        }
        if (detail::popcount(cand) == 1) {
          const VertexId c = detail::lowest(cand);
          ++forced;
          s.candidates &= ~bit(c);
          s.undominated &= ~closed_[c];
          done |= closed_[c];
          changed = true;
        }
      });
      if (forced < 0) return {};
    }
    if (s.undominated == 0) return {forced, 1};

    Tally total{forced, 1};
    Mask rest_d = s.undominated;
    while (rest_d != 0) {
      State part{0, bit(detail::lowest(rest_d))};
      Mask frontier = part.undominated;
      while (frontier != 0) {
        Mask cand = 0;
        for_each_bit(frontier, [&](VertexId w) { cand |= closed_[w]; });
        cand &= s.candidates & ~part.candidates;
        part.candidates |= cand;
        Mask reach = 0;
        for_each_bit(cand, [&](VertexId u) { reach |= closed_[u]; });
        frontier = reach & s.undominated & ~part.undominated;
        part.undominated |= frontier;
      }
      rest_d &= ~part.undominated;
      const Tally t = (part.undominated == s.undominated) ? branch(part) : solve(part);
      if (!t.feasible()) return {};
      detail::combine(total, t);
    }
    return total;
  }

  Tally branch(const State& s) {
    const VertexId w = most_constrained(s);
    VertexId c = detail::lowest(closed_[w] & s.candidates);
    int coverage = -1;
    for_each_bit(closed_[w] & s.candidates, [&](VertexId u) {
      const int k = detail::popcount(closed_[u] & s.undominated);
      if (k > coverage) {
        coverage = k;
        c = u;
      }
    });
    Tally best = detail::shifted(solve({s.candidates & ~bit(c), s.undominated & ~closed_[c]}), 1);
    detail::merge_min(best, solve({s.candidates & ~bit(c), s.undominated}));
    return best;
  }

  std::vector<Mask> closed_;
  detail::Deadline& deadline_;
  std::unordered_map<State, Tally, StateHash> memo_;
};

// Saturating binomial sum: number of subsets of size <= k from m elements.
std::uint64_t subsets_up_to(int m, int k, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(m, j)
  for (int j = 0; j <= k && j <= m; ++j) {
    if (j > 0) {
      const auto factor = static_cast<std::uint64_t>(m - j + 1);
      if (term > std::numeric_limits<std::uint64_t>::max() / factor) return cap + 1;
      term = term * factor / static_cast<std::uint64_t>(j);
      if (term > cap) return cap + 1;
    }
    total += term;
    if (total > cap) return cap + 1;
  }
  return total;
}

// Greedy cover size, or -1 when some vertex cannot be dominated at all.
int greedy_bound(const std::vector<Mask>& closed, State s) {
  int size = 0;
  while (s.undominated != 0) {
    VertexId pick = 0;
    int coverage = 0;
    for_each_bit(s.candidates, [&](VertexId u) {
      const int k = detail::popcount(closed[u] & s.undominated);
      if (k > coverage) {
        coverage = k;
        pick = u;
      }
    });
    if (coverage == 0) return -1;
    s.candidates &= ~bit(pick);
    s.undominated &= ~closed[pick];
    ++size;
  }
  return size;
}

// Tries all candidate subsets in increasing size; the first size with a cover is optimal.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const std::vector<Mask>& closed, State s, std::size_t limit,
                   detail::Deadline& deadline)
      : closed_(closed), target_(s.undominated), limit_(limit), deadline_(deadline) {
    for_each_bit(s.candidates, [&](VertexId u) {
      if (closed_[u] & target_) order_.push_back(u);
    });
  }

  int candidate_count() const { return static_cast<int>(order_.size()); }

  /// Returns {size, count} of the optimum, or an infeasible tally.
  Tally run(std::uint64_t max_subsets, Mask base, std::vector<Witness>& witnesses) {
    base_ = base;
    witnesses_ = &witnesses;
    const int m = candidate_count();
    Mask reachable = 0;
    for (VertexId u : order_) reachable |= closed_[u];
    if (target_ & ~reachable) return {};
    for (int k = 0; k <= m; ++k) {
      if (subsets_up_to(m, k, max_subsets) > max_subsets) {
        throw CapabilityError("exhaustive domination search needs more than " +
                              std::to_string(max_subsets) + " subsets");
      }
      hits_ = 0;
      visit(0, k, 0, 0);
      if (hits_ > 0) return {k, BigInt(static_cast<unsigned long>(hits_))};
    }
    return {};
  }

 private:
  void visit(std::size_t from, int left, Mask cover, Mask chosen) {
    if (left == 0) {
      deadline_.poll();
      if ((target_ & ~cover) == 0) {
        ++hits_;
        if (witnesses_->size() < limit_) witnesses_->push_back(detail::vertex_witness(chosen | base_));
      }
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= order_.size(); ++i) {
      const VertexId u = order_[i];
      visit(i + 1, left - 1, cover | closed_[u], chosen | bit(u));
    }
  }

  const std::vector<Mask>& closed_;
  Mask target_;
  std::size_t limit_;
  detail::Deadline& deadline_;
  std::vector<VertexId> order_;
  Mask base_ = 0;
  std::vector<Witness>* witnesses_ = nullptr;
  std::uint64_t hits_ = 0;
};

}  // namespace

SolveResult min_dominating_set(const Graph& g, const BoundaryConstraint& c,
                               const OracleBudget& budget, DominationStrategy strategy) {
  const auto pins = detail::validate_pins(g, Problem::DominatingSet, c);
  detail::Deadline deadline(budget.max_time);
  std::vector<Mask> closed = detail::adjacency_masks(g, budget);
  for (VertexId v = 0; v < closed.size(); ++v) closed[v] |= bit(v);

  State start{detail::all_vertices(g.vertex_count()) & ~pins.in & ~pins.out,
              detail::all_vertices(g.vertex_count())};
  for_each_bit(pins.in, [&](VertexId v) { start.undominated &= ~closed[v]; });
  const int base = detail::popcount(pins.in);

  if (strategy == DominationStrategy::Auto) {
    const int bound = greedy_bound(closed, start);
    int useful = 0;
    for_each_bit(start.candidates,
                 [&](VertexId u) { useful += (closed[u] & start.undominated) != 0; });
    strategy = bound >= 0 && subsets_up_to(useful, bound, budget.max_subsets) <= budget.max_subsets
                   ? DominationStrategy::ExhaustiveBySize
                   : DominationStrategy::BranchAndReduce;
  }

  std::vector<Witness> witnesses;
  Tally best;
  if (strategy == DominationStrategy::ExhaustiveBySize) {
    ExhaustiveSearch search(closed, start, budget.max_witnesses, deadline);
    best = detail::shifted(search.run(budget.max_subsets, pins.in, witnesses), base);
  } else {
    DominationCounter counter(closed, deadline);
    best = detail::shifted(counter.solve(start), base);
    if (best.feasible()) counter.enumerate(start, pins.in, witnesses, budget.max_witnesses);
  }
  deadline.check();
  return detail::finish(best, std::move(witnesses));
}

}  // namespace sfg
