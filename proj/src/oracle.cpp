#include <algorithm>
#include <string>

#include "oracle_detail.hpp"
#include "sfg/errors.hpp"
#include "sfg/generators.hpp"
#include "sfg/oracle.hpp"

namespace sfg {
namespace detail {

void Deadline::check() const {
  if (std::chrono::steady_clock::now() > end_) {
    throw CapabilityError("oracle time budget exhausted");
  }
}

std::vector<Mask> adjacency_masks(const Graph& g, const OracleBudget& budget) {
  const std::size_t limit = std::min<std::size_t>(budget.max_vertices, 64);
  if (g.vertex_count() > limit) {
    throw CapabilityError("exact oracle limited to " + std::to_string(limit) + " vertices, got " +
                          std::to_string(g.vertex_count()));
  }
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

PinSets validate_pins(const Graph& g, Problem problem, const BoundaryConstraint& c) {
  if (c.pins.size() > 2) throw UsageError("a boundary constraint pins at most two vertices");
  PinSets sets;
  Mask seen = 0;
  for (const Pin& pin : c.pins) {
    if (pin.vertex >= g.vertex_count()) {
      throw UsageError("constraint pins vertex " + std::to_string(pin.vertex) + " out of range");
    }
    if (seen & bit(pin.vertex)) throw UsageError("constraint pins a vertex twice");
    seen |= bit(pin.vertex);

    const bool matching_req = pin.requirement == Requirement::MustBeSaturated ||
                              pin.requirement == Requirement::MustBeUnsaturated;
    const bool set_req =
        pin.requirement == Requirement::MustBeIn || pin.requirement == Requirement::MustBeOut;
    if ((problem == Problem::Matching && set_req) || (problem != Problem::Matching && matching_req)) {
      throw UsageError(std::string("requirement ") + std::string(to_string(pin.requirement)) +
                       " does not apply to " + std::string(to_string(problem)));
    }
    switch (pin.requirement) {
      case Requirement::Free: break;
      case Requirement::MustBeSaturated: sets.saturated |= bit(pin.vertex); break;
      case Requirement::MustBeUnsaturated: sets.unsaturated |= bit(pin.vertex); break;
      case Requirement::MustBeIn: sets.in |= bit(pin.vertex); break;
      case Requirement::MustBeOut: sets.out |= bit(pin.vertex); break;
    }
  }
  return sets;
}

SolveResult finish(const Tally& tally, std::vector<Witness> witnesses) {
  SolveResult result;
  if (!tally.feasible()) return result;
  result.optimum = static_cast<std::uint32_t>(tally.size);
  result.count = tally.count;
  std::sort(witnesses.begin(), witnesses.end());
  result.truncated = cmp(result.count, witnesses.size()) > 0;
  result.witnesses = std::move(witnesses);
  return result;
}

Witness vertex_witness(Mask set) {
  Witness w;
  for_each_bit(set, [&](VertexId v) { w.vertices.push_back(v); });
  return w;
}

}  // namespace detail

SolveResult solve(const Graph& g, Problem problem, const BoundaryConstraint& c,
                  const OracleBudget& budget) {
  switch (problem) {
    case Problem::Matching: return max_matching(g, c, budget);
    case Problem::IndependentSet: return max_independent_set(g, c, budget);
    case Problem::DominatingSet: return min_dominating_set(g, c, budget);
  }
  throw UsageError("unknown problem");
}

bool better_optimum(Problem problem, std::uint32_t candidate, std::uint32_t incumbent) {
  return problem == Problem::DominatingSet ? candidate < incumbent : candidate > incumbent;
}

BoundaryConstraint classification_constraint(Problem problem, VertexId a, VertexId b, int k,
                                             int touched) {
  const Requirement yes =
      problem == Problem::Matching ? Requirement::MustBeSaturated : Requirement::MustBeIn;
  const Requirement no =
      problem == Problem::Matching ? Requirement::MustBeUnsaturated : Requirement::MustBeOut;
  switch (k) {
    case 0: return BoundaryConstraint::of(a, no, b, no);
    case 1:
      return touched == 0 ? BoundaryConstraint::of(a, yes, b, no)
                          : BoundaryConstraint::of(a, no, b, yes);
    case 2: return BoundaryConstraint::of(a, yes, b, yes);
    default: throw UsageError("classification index k must be 0, 1 or 2");
  }
}

ClassifiedTable classified_table(const Graph& g, Problem problem, const OracleBudget& budget) {
  const auto [a, b] = boundary(g);
  return classified_table(g, problem, a, b, budget);
}

ClassifiedTable classified_table(const Graph& g, Problem problem, VertexId a, VertexId b,
                                 const OracleBudget& budget) {
  ClassifiedTable table;
  table.problem = problem;
  table.first = a;
  table.second = b;
  for (int k = 0; k < 3; ++k) {
    if (k != 1) {
      table.entries[k].aggregate =
          solve(g, problem, classification_constraint(problem, a, b, k), budget);
      continue;
    }
    auto& entry = table.entries[1];
    for (int side = 0; side < 2; ++side) {
      entry.per_vertex.push_back(
          solve(g, problem, classification_constraint(problem, a, b, 1, side), budget));
    }
    SolveResult& agg = entry.aggregate;
    for (const SolveResult& part : entry.per_vertex) {
      if (!part.feasible()) continue;
      if (!agg.feasible() || better_optimum(problem, *part.optimum, *agg.optimum)) {
        agg = part;
      } else if (*part.optimum == *agg.optimum) {
        agg.count += part.count;
        agg.witnesses.insert(agg.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
      }
    }
    std::sort(agg.witnesses.begin(), agg.witnesses.end());
    if (agg.witnesses.size() > budget.max_witnesses) agg.witnesses.resize(budget.max_witnesses);
    agg.truncated = agg.feasible() && cmp(agg.count, agg.witnesses.size()) > 0;
  }
  return table;
}

UniqueOptimum is_unique_optimum(const Graph& g, Problem problem, const OracleBudget& budget) {
  OracleBudget one = budget;
  one.max_witnesses = std::max<std::size_t>(1, budget.max_witnesses);
  SolveResult result = solve(g, problem, {}, one);
  UniqueOptimum answer;
  answer.unique = result.count == 1;
  if (answer.unique) answer.witness = result.witnesses.front();
  return answer;
}

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::Matching: return "matching";
    case Problem::IndependentSet: return "mis";
    case Problem::DominatingSet: return "mds";
  }
  return "matching";
}

std::string_view to_string(Requirement requirement) {
  switch (requirement) {
    case Requirement::Free: return "free";
    case Requirement::MustBeSaturated: return "saturated";
    case Requirement::MustBeUnsaturated: return "unsaturated";
    case Requirement::MustBeIn: return "in";
    case Requirement::MustBeOut: return "out";
  }
  return "free";
}

std::optional<Problem> parse_problem(std::string_view text) {
  if (text == "matching") return Problem::Matching;
  if (text == "mis") return Problem::IndependentSet;
  if (text == "mds") return Problem::DominatingSet;
  return std::nullopt;
}

}  // namespace sfg
