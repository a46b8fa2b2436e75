#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sfg/bigint.hpp"
#include "sfg/graph.hpp"

// Exact solvers for maximum matching, maximum independent set and minimum dominating set.
//
// Every solver returns the optimum together with the exact number of optimal solutions.
// None of them use heuristics for the answer: heuristics only pick branching order or a
// search strategy. Vertex sets are handled as 64-bit masks, so graphs are limited to 64
// vertices (the largest desk-scale instance, level 3 of either family, has 44).

namespace sfg {

enum class Problem : std::uint8_t { Matching, IndependentSet, DominatingSet };

enum class Requirement : std::uint8_t {
  Free,
  MustBeSaturated,    // matching only: some matching edge covers the vertex
  MustBeUnsaturated,  // matching only
  MustBeIn,           // vertex-set problems only
  MustBeOut,          // vertex-set problems only
};

struct Pin {
  VertexId vertex = 0;
  Requirement requirement = Requirement::Free;

  friend bool operator==(const Pin&, const Pin&) = default;
};

/// Requirements on up to two designated vertices. Free pins are ignored.
struct BoundaryConstraint {
  std::vector<Pin> pins;

  static BoundaryConstraint free() { return {}; }
  static BoundaryConstraint of(VertexId v, Requirement r) { return {{{v, r}}}; }
  static BoundaryConstraint of(VertexId a, Requirement ra, VertexId b, Requirement rb) {
    return {{{a, ra}, {b, rb}}};
  }

  friend bool operator==(const BoundaryConstraint&, const BoundaryConstraint&) = default;
};

/// Exceeding any limit raises CapabilityError; a partial answer is never returned.
struct OracleBudget {
  std::size_t max_vertices = 64;
  std::chrono::milliseconds max_time = std::chrono::minutes(10);
  /// Optimal solutions listed per result; counts stay exact past this cap.
  std::size_t max_witnesses = 1000;
  /// Largest number of subsets the exhaustive dominating-set search may visit.
  std::uint64_t max_subsets = 100'000'000;
};

enum class DominationStrategy : std::uint8_t {
  /// Exhaustive by size when the greedy bound keeps the subset count within budget,
  /// branch-and-reduce otherwise.
  Auto,
  BranchAndReduce,
  ExhaustiveBySize,
};

/// One optimal solution: a vertex set (sorted) or a matching (pairs with u < v, sorted).
struct Witness {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct SolveResult {
  /// Empty iff no solution satisfies the constraint; count is then zero.
  std::optional<std::uint32_t> optimum;
  BigInt count = 0;
  std::vector<Witness> witnesses;
  /// True when fewer witnesses were listed than count.
  bool truncated = false;

  bool feasible() const { return optimum.has_value(); }
};

SolveResult max_matching(const Graph& g, const BoundaryConstraint& c = {},
                         const OracleBudget& budget = {});

SolveResult max_independent_set(const Graph& g, const BoundaryConstraint& c = {},
                                const OracleBudget& budget = {});

SolveResult min_dominating_set(const Graph& g, const BoundaryConstraint& c = {},
                               const OracleBudget& budget = {},
                               DominationStrategy strategy = DominationStrategy::Auto);

SolveResult solve(const Graph& g, Problem problem, const BoundaryConstraint& c = {},
                  const OracleBudget& budget = {});

/// Constraint selecting the solutions that touch exactly k of {a, b}. For k == 1,
/// `touched` says which of the two is touched (0 -> a, 1 -> b).
BoundaryConstraint classification_constraint(Problem problem, VertexId a, VertexId b, int k,
                                             int touched = 0);

struct ClassifiedEntry {
  /// Best over all solutions touching exactly k boundary vertices.
  SolveResult aggregate;
  /// For k == 1: {touching first only, touching second only}. Empty otherwise.
  std::vector<SolveResult> per_vertex;
};

struct ClassifiedTable {
  Problem problem = Problem::Matching;
  VertexId first = 0;
  VertexId second = 0;
  std::array<ClassifiedEntry, 3> entries;
};

/// Classified optima and counts over the generated graph's boundary pair.
ClassifiedTable classified_table(const Graph& g, Problem problem, const OracleBudget& budget = {});

/// Same, over an explicit vertex pair.
ClassifiedTable classified_table(const Graph& g, Problem problem, VertexId a, VertexId b,
                                 const OracleBudget& budget = {});

struct UniqueOptimum {
  bool unique = false;
  std::optional<Witness> witness;
};

UniqueOptimum is_unique_optimum(const Graph& g, Problem problem, const OracleBudget& budget = {});

/// True when `candidate` beats `incumbent` for the problem's objective (max or min).
bool better_optimum(Problem problem, std::uint32_t candidate, std::uint32_t incumbent);

std::string_view to_string(Problem problem);
std::string_view to_string(Requirement requirement);
std::optional<Problem> parse_problem(std::string_view text);

}  // namespace sfg
