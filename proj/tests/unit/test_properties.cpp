#include <random>

#include "doctest.h"
#include "naive.hpp"
#include "sfg/oracle.hpp"

using namespace sfg;

namespace {

void compare(const Graph& g, Problem p, const BoundaryConstraint& c) {
  const SolveResult fast = solve(g, p, c, {.max_witnesses = 50});
  const testing::NaiveResult slow = testing::naive_solve(g, p, c);
  REQUIRE(fast.optimum == slow.optimum);
  CHECK(fast.count == slow.count);
  if (!fast.feasible()) return;
  for (const Witness& w : fast.witnesses) CHECK(testing::valid_witness(g, p, c, w, *fast.optimum));
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("optimised solvers agree with full enumeration on random graphs") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 150; ++i) {
      const Graph g = testing::random_graph(rng, 12);
      for (Problem p : {Problem::Matching, Problem::IndependentSet, Problem::DominatingSet}) {
        compare(g, p, {});
      }
    }
  }

  TEST_CASE("constrained solvers agree with full enumeration") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 150; ++i) {
      const Graph g = testing::random_graph(rng, 11, 0.15, 0.5);
      for (Problem p : {Problem::Matching, Problem::IndependentSet, Problem::DominatingSet}) {
        compare(g, p, testing::random_constraint(rng, g, p));
      }
    }
  }

  TEST_CASE("sparse graphs exercise component splitting") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const Graph g = testing::random_graph(rng, 14, 0.02, 0.15);
      for (Problem p : {Problem::Matching, Problem::IndependentSet, Problem::DominatingSet}) {
        compare(g, p, {});
      }
    }
  }

  TEST_CASE("exhaustive domination agrees with enumeration") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
      const Graph g = testing::random_graph(rng, 12);
      const auto c = testing::random_constraint(rng, g, Problem::DominatingSet);
      const SolveResult fast = min_dominating_set(g, c, {}, DominationStrategy::ExhaustiveBySize);
      const testing::NaiveResult slow = testing::naive_dominating_set(g, c);
      CHECK(fast.optimum == slow.optimum);
      CHECK(fast.count == slow.count);
    }
  }
}
