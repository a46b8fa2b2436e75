#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "sfg/bigint.hpp"
#include "sfg/graph.hpp"
#include "sfg/oracle.hpp"

namespace sfg::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(VertexId v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline VertexId lowest(Mask m) { return static_cast<VertexId>(std::countr_zero(m)); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Size and number of optimal solutions of a subproblem. count == 0 means infeasible.
struct Tally {
  int size = 0;
  BigInt count = 0;

  bool feasible() const { return sgn(count) > 0; }
};

inline Tally unit_tally() { return {0, 1}; }

/// Keeps the larger size; equal sizes add their counts.
inline void merge_max(Tally& best, const Tally& candidate) {
  if (!candidate.feasible()) return;
  if (!best.feasible() || candidate.size > best.size) {
    best = candidate;
  } else if (candidate.size == best.size) {
    best.count += candidate.count;
  }
}

inline void merge_min(Tally& best, const Tally& candidate) {
  if (!candidate.feasible()) return;
  if (!best.feasible() || candidate.size < best.size) {
    best = candidate;
  } else if (candidate.size == best.size) {
    best.count += candidate.count;
  }
}

/// Independent parts: sizes add, counts multiply.
inline void combine(Tally& acc, const Tally& part) {
  acc.size += part.size;
  acc.count *= part.count;
}

inline Tally shifted(Tally t, int by) {
  t.size += by;
  return t;
}

/// Polled from the hot loops; throws CapabilityError once the time budget is spent.
class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget) {}

  void poll() {
    if ((++calls_ & 0xFFF) == 0) check();
  }
  void check() const;

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t calls_ = 0;
};

/// Open-neighbourhood masks. Throws CapabilityError when the graph exceeds the budget or
/// the 64-vertex mask width.
std::vector<Mask> adjacency_masks(const Graph& g, const OracleBudget& budget);

inline Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Connected component of `seed` inside `within`.
inline Mask component_of(VertexId seed, Mask within, const std::vector<Mask>& adj) {
  Mask comp = bit(seed);
  Mask frontier = comp;
  while (frontier != 0) {
    Mask reach = 0;
    for_each_bit(frontier, [&](VertexId v) { reach |= adj[v]; });
    frontier = reach & within & ~comp;
    comp |= frontier;
  }
  return comp;
}

/// Pins validated against the problem and graph, split by requirement.
struct PinSets {
  Mask saturated = 0;
  Mask unsaturated = 0;
  Mask in = 0;
  Mask out = 0;
};

PinSets validate_pins(const Graph& g, Problem problem, const BoundaryConstraint& c);

/// Converts a tally plus listed witnesses into the public result type.
SolveResult finish(const Tally& tally, std::vector<Witness> witnesses);

Witness vertex_witness(Mask set);

}  // namespace sfg::detail
