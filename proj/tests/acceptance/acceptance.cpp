// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
// Informational lines ([INFO]) never affect the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "naive.hpp"
#include "sfg/decimation.hpp"
#include "sfg/generators.hpp"
#include "sfg/oracle.hpp"
#include "sfg/verify.hpp"

using namespace sfg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " +
                                         std::to_string(limit_seconds) + " s");
  std::printf("[%s] %d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
              o.detail.empty() ? "" : " :: ", o.detail.c_str());
  for (const std::string& line : o.info) std::printf("[INFO] %d %s\n", id, line.c_str());
  if (!o.pass) ++failures;
}

std::string str(const BigInt& v) { return to_decimal(v); }

// Reference values computed here with plain integer arithmetic, independent of the library.
std::uint64_t vertices_at(int n) { return 2 * ((std::uint64_t{1} << (2 * n)) + 2) / 3; }
std::uint64_t edges_at(int n) { return ((std::uint64_t{1} << (2 * n + 2)) - 1) / 3; }

BigInt two_to_two_to(unsigned e, int minus = 0) {
  BigInt exponent = BigInt(1) << e;
  exponent -= minus;
  BigInt v = 1;
  v <<= exponent.get_ui();
  return v;
}

Graph graph(Model m, int n) { return build(m, n, Method::EdgeReplacement); }

std::uint32_t optimum(const SolveResult& r) { return r.feasible() ? *r.optimum : 0; }

}  // namespace

int main() {
  criterion(1, "structure: N_n, E_n for n <= 8, replacement and merge isomorphic for n <= 3", 10,
            [](Outcome& o) {
              for (Model m : {Model::Fractal, Model::NonFractal}) {
                for (int n = 0; n <= 8; ++n) {
                  const Graph g = graph(m, n);
                  o.require(g.vertex_count() == vertices_at(n) && g.edge_count() == edges_at(n),
                            std::string(to_string(m)) + " n=" + std::to_string(n) + " counts");
                }
                for (int n = 0; n <= 3; ++n) {
                  o.require(isomorphic(graph(m, n), build(m, n, Method::Merge)),
                            std::string(to_string(m)) + " n=" + std::to_string(n) + " isomorphism");
                }
              }
            });

  criterion(2, "fractal matching: beta = 2, 6, 22, perfect, counts 2, 8, 128", 60, [](Outcome& o) {
    const std::uint32_t beta[] = {2, 6, 22};
    const unsigned long count[] = {2, 8, 128};
    for (int n = 1; n <= 3; ++n) {
      const Graph g = graph(Model::Fractal, n);
      const SolveResult r = max_matching(g, {}, {.max_witnesses = 0});
      const std::string at = " n=" + std::to_string(n);
      o.require(optimum(r) == beta[n - 1], "beta" + at + " = " + std::to_string(optimum(r)));
      o.require(2 * optimum(r) == g.vertex_count(), "not perfect" + at);
      o.require(r.count == count[n - 1], "count" + at + " = " + str(r.count));
    }
  });

  criterion(3, "non-fractal matching: beta = 2, 4, 12; counts equal the recursion at n = 1, 2", 60,
            [](Outcome& o) {
              const std::uint32_t beta[] = {2, 4, 12};
              const Quantity q{Model::NonFractal, Problem::Matching};
              for (int n = 1; n <= 3; ++n) {
                const SolveResult r = max_matching(graph(Model::NonFractal, n), {}, {.max_witnesses = 0});
                o.require(optimum(r) == beta[n - 1], "beta n=" + std::to_string(n));
              }
              for (int n = 1; n <= 2; ++n) {
                const Graph g = graph(Model::NonFractal, n);
                const CountState rec = count_recursion(q, n);
                const SolveResult r = max_matching(g, {}, {.max_witnesses = 0});
                const testing::NaiveResult naive = testing::naive_matching(g);
                const std::string at = " n=" + std::to_string(n);
                o.require(r.count == *rec.theta, "oracle theta" + at + " = " + str(r.count));
                o.require(naive.count == *rec.theta, "enumerated theta" + at);
                o.require(naive.optimum == r.optimum, "enumerated beta" + at);

                const ClassifiedTable t = classified_table(g, Problem::Matching, {.max_witnesses = 0});
                o.require(t.entries[0].aggregate.count == *rec.phi, "phi" + at);
                const BigInt& one_hub = t.entries[1].per_vertex.at(0).count;
                const BigInt& total = t.entries[1].aggregate.count;
                o.require(one_hub == *rec.varphi, "per-hub varphi" + at);
                o.info.push_back("n=" + std::to_string(n) + " theta " + str(*rec.theta) +
                                 " (oracle " + str(r.count) + ", enumeration " +
                                 std::to_string(naive.count) + "), varphi " + str(*rec.varphi) +
                                 " = per-hub count " + str(one_hub) + ", both-hub aggregate " +
                                 str(total));
              }
              o.info.push_back("varphi resolved as the per-designated-hub count");
            });

  criterion(4, "independence: fractal alpha/counts, non-fractal unique MIS = degree-2 vertices with created_at = n-1",
            120, [](Outcome& o) {
              const std::uint32_t alpha_f[] = {4, 16};
              const unsigned long count_f[] = {16, 65536};
              for (int n = 2; n <= 3; ++n) {
                const SolveResult r = max_independent_set(graph(Model::Fractal, n), {}, {.max_witnesses = 0});
                o.require(optimum(r) == alpha_f[n - 2], "fractal alpha n=" + std::to_string(n));
                o.require(r.count == count_f[n - 2], "fractal count n=" + std::to_string(n));
              }
              const std::uint32_t alpha_nf[] = {2, 8, 32};
              bool corrected_ok = true;
              for (int n = 1; n <= 3; ++n) {
                const Graph g = graph(Model::NonFractal, n);
                const SolveResult r = max_independent_set(g, {}, {.max_witnesses = 2});
                const std::string at = " n=" + std::to_string(n);
                o.require(optimum(r) == alpha_nf[n - 1], "non-fractal alpha" + at);
                o.require(r.count == 1, "non-fractal count" + at + " = " + str(r.count));
                if (r.witnesses.size() != 1) continue;
                const std::vector<VertexId>& mis = r.witnesses.front().vertices;
                auto degree_two_created = [&](int t) {
                  std::vector<VertexId> set;
                  for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    if (g.degree(v) == 2 && g.meta(v).created_at == t) set.push_back(v);
                  }
                  return set;
                };
                const auto literal = degree_two_created(n - 1);
                o.require(mis == literal, "MIS" + at + " (" + std::to_string(mis.size()) +
                                              " vertices) != degree-2 created_at=n-1 (" +
                                              std::to_string(literal.size()) + " vertices)");
                corrected_ok = corrected_ok && mis == degree_two_created(n);
              }
              o.info.push_back(std::string("unique MIS equals the degree-2 vertices with created_at = n for n = 1..3: ") +
                               (corrected_ok ? "yes" : "no"));

              const VerificationReport rep =
                  run_verification({Model::Fractal, Problem::IndependentSet}, 1, 1);
              const VerifyRow& row = rep.rows.at(0);
              o.require(row.status == RowStatus::Mismatch && row.known &&
                            row.headline.oracle == "2" && row.headline.closed_form == "1",
                        "n=1 fractal discrepancy not reproduced as a known mismatch");
              o.info.push_back("fractal n=1: oracle alpha " + row.headline.oracle.value_or("?") +
                               " vs formula " + row.headline.closed_form.value_or("?") +
                               ", allowlisted as fractal-independence-n1");
            });

  criterion(5, "domination: G_2 gamma 3 count 2, G_3 gamma 8, G'_3 gamma 4 unique = hubs and borders", 600 + 60,
            [](Outcome& o) {
              const SolveResult g2 = min_dominating_set(graph(Model::Fractal, 2), {}, {.max_witnesses = 0});
              o.require(optimum(g2) == 3, "gamma(G_2) = " + std::to_string(optimum(g2)));
              o.require(g2.count == 2, "MDS count of G_2 = " + str(g2.count) + ", expected 2");

              OracleBudget ten_minutes;
              ten_minutes.max_time = std::chrono::minutes(10);
              ten_minutes.max_witnesses = 0;
              const SolveResult g3 = min_dominating_set(graph(Model::Fractal, 3), {}, ten_minutes,
                                                        DominationStrategy::BranchAndReduce);
              o.require(optimum(g3) == 8, "gamma(G_3) = " + std::to_string(optimum(g3)));
              o.info.push_back("optional: MDS count of G_3 = " + str(g3.count) + " (expected 16): " +
                               (g3.count == 16 ? "pass" : "fail"));

              const Graph nf = graph(Model::NonFractal, 3);
              const auto start = Clock::now();
              const SolveResult r =
                  min_dominating_set(nf, {}, {.max_witnesses = 2}, DominationStrategy::ExhaustiveBySize);
              const double secs = std::chrono::duration<double>(Clock::now() - start).count();
              o.require(secs < 10, "exhaustive G'_3 took " + std::to_string(secs) + " s");
              o.require(optimum(r) == 4, "gamma(G'_3) = " + std::to_string(optimum(r)));
              o.require(r.count == 1, "MDS count of G'_3 = " + str(r.count));
              std::vector<VertexId> hubs_and_borders;
              for (VertexId v = 0; v < nf.vertex_count(); ++v) {
                const Role role = nf.meta(v).role;
                if ((role == Role::Hub || role == Role::Border) && nf.meta(v).created_at <= 2) {
                  hubs_and_borders.push_back(v);
                }
              }
              o.require(!r.witnesses.empty() && r.witnesses.front().vertices == hubs_and_borders,
                        "unique MDS of G'_3 is not the hub and border set");
              if (g2.count != 2) {
                o.info.push_back("G_2 has " + str(g2.count) +
                                 " minimum dominating sets; 2 is the count of the class containing both initial vertices");
              }
            });

  criterion(6, "recursions reproduce closed forms for n <= 12, counts exact, /3 divisibility", 1,
            [](Outcome& o) {
              for (Quantity q : all_quantities()) {
                for (const LevelRecord& rec : size_trajectory(q, 12)) {
                  const int n = rec.sizes.level;
                  if (n < headline_first_level(q)) continue;
                  o.require(rec.sizes.headline() == headline_closed_form(q, n),
                            to_string(q) + " headline n=" + std::to_string(n));
                }
                for (int n = 1; n <= 12; ++n) {
                  for (int k = 0; k < 3; ++k) {
                    const auto first = component_first_level(q, k);
                    if (first && n >= *first) component_closed_form(q, k, n);  // throws if not /3
                  }
                  if (n >= headline_first_level(q)) headline_closed_form(q, n);
                }
              }
              for (int n = 1; n <= 12; ++n) {
                const std::uint64_t p = std::uint64_t{1} << (2 * n);
                o.require((p + 2) % 3 == 0 && (p - 1) % 3 == 0 && (p / 2 + 4) % 3 == 0 &&
                              (p / 2 - 2) % 3 == 0 && (p / 2 + 1) % 3 == 0,
                          "divisibility n=" + std::to_string(n));
              }
              const Quantity fm{Model::Fractal, Problem::Matching};
              const Quantity fi{Model::Fractal, Problem::IndependentSet};
              const Quantity fd{Model::Fractal, Problem::DominatingSet};
              const Quantity ni{Model::NonFractal, Problem::IndependentSet};
              const Quantity nd{Model::NonFractal, Problem::DominatingSet};
              for (int n = 1; n <= 12; ++n) {
                const std::string at = " n=" + std::to_string(n);
                const CountState s = count_recursion(fm, n);
                o.require(*s.theta == two_to_two_to(static_cast<unsigned>(n), 1) && *s.phi == 1,
                          "theta" + at);
                o.require(*count_recursion(fi, n).x == two_to_two_to(static_cast<unsigned>(2 * n - 2)),
                          "x" + at);
                o.require(*count_recursion(ni, n).x == 1, "non-fractal x" + at);
                if (n >= 2) {
                  o.require(*count_recursion(fd, n).y == two_to_two_to(static_cast<unsigned>(2 * n - 4)),
                            "y" + at);
                  o.require(*count_recursion(nd, n).y == 1, "non-fractal y" + at);
                }
              }
            });

  criterion(7, "classified oracle optima at n = 1, 2 equal the component closed forms", 60,
            [](Outcome& o) {
              int compared = 0;
              for (Quantity q : all_quantities()) {
                for (int n = 1; n <= 2; ++n) {
                  const ClassifiedTable t =
                      classified_table(graph(q.model, n), q.problem, {.max_witnesses = 0});
                  for (int k = 0; k < 3; ++k) {
                    const SolveResult& r = t.entries[k].aggregate;
                    const auto first = component_first_level(q, k);
                    const std::string at =
                        to_string(q) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
                    if (!first) {
                      o.require(!r.feasible(), at + " should be infeasible");
                      continue;
                    }
                    if (n < *first) continue;
                    ++compared;
                    const std::int64_t closed = component_closed_form(q, k, n);
                    o.require(r.feasible() && *r.optimum == closed,
                              at + ": oracle " + std::to_string(optimum(r)) + " vs " +
                                  std::to_string(closed));
                  }
                }
              }
              o.info.push_back(std::to_string(compared) + " in-range classified cells compared");
              const ClassifiedTable fd2 =
                  classified_table(graph(Model::Fractal, 2), Problem::DominatingSet, {.max_witnesses = 0});
              const std::uint32_t g0 = optimum(fd2.entries[0].aggregate);
              const auto seed = size_seed({Model::Fractal, Problem::DominatingSet}).s[0];
              o.info.push_back("fractal gamma^0_2: oracle " + std::to_string(g0) + ", closed form " +
                               std::to_string(component_closed_form({Model::Fractal, Problem::DominatingSet}, 0, 2)) +
                               ", stated seed " + std::to_string(*seed) + " -> closed form confirmed");
            });

  criterion(8, "200 random graphs (<= 14 vertices): optimised solvers equal full enumeration", 60,
            [](Outcome& o) {
              std::mt19937_64 rng(8);
              int disagreements = 0;
              for (int i = 0; i < 200; ++i) {
                const Graph g = testing::random_graph(rng, 14, 0.1, 0.5);
                for (Problem p : {Problem::Matching, Problem::IndependentSet, Problem::DominatingSet}) {
                  const SolveResult fast = solve(g, p, {}, {.max_witnesses = 0});
                  const testing::NaiveResult slow = testing::naive_solve(g, p);
                  if (fast.optimum != slow.optimum || fast.count != slow.count) ++disagreements;
                }
              }
              o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
            });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
