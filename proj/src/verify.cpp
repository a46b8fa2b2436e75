#include "sfg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "sfg/errors.hpp"
#include "sfg/generators.hpp"

namespace sfg {
namespace {

constexpr Quantity kFI{Model::Fractal, Problem::IndependentSet};
constexpr Quantity kFD{Model::Fractal, Problem::DominatingSet};
constexpr Quantity kND{Model::NonFractal, Problem::DominatingSet};

bool covers(const KnownIssue& issue, Quantity q, const std::string& field, int n) {
  return issue.quantity == q && issue.field == field && n >= issue.first_level &&
         (!issue.last_level || n <= *issue.last_level);
}

std::string str(std::int64_t v) { return std::to_string(v); }

VerifyRow verify_level(Quantity q, int n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyRow row;
  row.n = n;
  if (options.classified) row.classified.emplace();

  if (n >= size_base_level(q)) {
    const SizeTriple t = size_recursion(q, n, options.recursion);
    row.headline.recursion = str(t.headline());
    if (row.classified) {
      for (int k = 0; k < 3; ++k) {
        (*row.classified)[k].recursion = t.s[k] ? str(*t.s[k]) : "infeasible";
      }
    }
  }
  if (n >= headline_stated_first_level(q) && n <= kMaxSizeLevel) {
    row.headline.closed_form = str(headline_closed_form(q, n, ClosedFormRange::Stated));
  }
  if (row.classified) {
    for (int k = 0; k < 3; ++k) {
      const auto first = component_first_level(q, k);
      if (!first) {
        (*row.classified)[k].closed_form = "infeasible";
      } else if (n >= *first && n <= kMaxSizeLevel) {
        (*row.classified)[k].closed_form = str(component_closed_form(q, k, n));
      }
    }
  }
  if (n >= count_base_level(q)) {
    row.count.recursion = to_decimal(count_recursion(q, n, options.counts).headline(q.problem));
    if (auto closed = count_closed_form(q, n, options.counts)) {
      row.count.closed_form = to_decimal(*closed);
    }
  }

  bool skipped = false;
  try {
    OracleBudget budget = options.budget;
    budget.max_witnesses = 0;
    const Graph g = build(q.model, n, Method::EdgeReplacement);
    const SolveResult whole = solve(g, q.problem, {}, budget);
    row.headline.oracle = str(*whole.optimum);
    row.count.oracle = to_decimal(whole.count);
    if (row.classified) {
      if (n == 0) {
        row.note = "no boundary classification at n = 0";
      } else {
        const ClassifiedTable table = classified_table(g, q.problem, budget);
        for (int k = 0; k < 3; ++k) {
          const SolveResult& r = table.entries[k].aggregate;
          (*row.classified)[k].oracle = r.feasible() ? str(*r.optimum) : "infeasible";
        }
      }
    }
  } catch (const CapabilityError& e) {
    skipped = true;
    row.note = e.what();
  }

  auto check = [&](const Triple& t, const std::string& field) {
    if (t.disagrees()) row.mismatched_fields.push_back(field);
  };
  check(row.headline, "headline");
  check(row.count, "count");
  if (row.classified) {
    for (int k = 0; k < 3; ++k) check((*row.classified)[k], "s" + std::to_string(k));
  }

  if (!row.mismatched_fields.empty()) {
    row.status = RowStatus::Mismatch;
    row.known = true;
    for (const std::string& field : row.mismatched_fields) {
      const auto& issues = known_issues();
      auto it = std::find_if(issues.begin(), issues.end(),
                             [&](const KnownIssue& i) { return covers(i, q, field, n); });
      if (it == issues.end()) {
        row.known = false;
      } else if (std::find(row.known_issues.begin(), row.known_issues.end(), it->id) ==
                 row.known_issues.end()) {
        row.known_issues.push_back(it->id);
      }
    }
    if (!row.known) row.known_issues.clear();
  } else if (skipped) {
    row.status = RowStatus::OracleSkipped;
  } else if (!row.headline.recursion || !row.headline.closed_form) {
    row.status = RowStatus::FormulaOutOfRange;
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

}  // namespace

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::OracleSkipped: return "oracle-skipped";
    case RowStatus::FormulaOutOfRange: return "formula-out-of-range";
  }
  return "match";
}

const std::vector<KnownIssue>& known_issues() {
  static const std::vector<KnownIssue> issues = {
      {"fractal-independence-n1", kFI, "headline", 1, 1,
       "2^(2n-2) gives 1 at n = 1; G_1 has independence number 2 ({X, Y})"},
      {"fractal-independence-n1", kFI, "count", 1, 1,
       "seed x_1 = 2 counts the two-initial-vertex class; G_1 has exactly one maximum "
       "independent set"},
      {"fractal-independence-alpha2-closed-form", kFI, "s2", 3, std::nullopt,
       "2^(2n-2) - (n-1)2^(n-1) + 1 gives 9 at n = 3; the recurrence and the oracle give 10"},
      {"fractal-domination-gamma0-seed", kFD, "s0", 2, 2,
       "stated seed gamma^0_2 = 4; the closed form and the oracle give 3"},
      {"fractal-domination-gamma0-n3", kFD, "s0", 3, std::nullopt,
       "the k = 0 recurrence and closed form give 10 at n = 3; the oracle finds 9"},
      {"fractal-domination-count-n2", kFD, "count", 2, 2,
       "seed y_2 = 2 counts the class containing both initial vertices; G_2 has 26 minimum "
       "dominating sets, all three classes tying at size 3"},
      {"nonfractal-domination-count-n2", kND, "count", 2, 2,
       "seed y_2 = 1; G'_2 has two minimum dominating sets"},
  };
  return issues;
}

bool Triple::disagrees() const {
  std::vector<const std::string*> present;
  for (const auto* v : {&oracle, &recursion, &closed_form}) {
    if (*v) present.push_back(&**v);
  }
  for (std::size_t i = 1; i < present.size(); ++i) {
    if (*present[i] != *present[0]) return true;
  }
  return false;
}

VerificationReport run_verification(Quantity q, int n_first, int n_last,
                                    const VerifyOptions& options) {
  if (n_first < 0 || n_last < n_first) {
    throw UsageError("verification range must satisfy 0 <= first <= last");
  }
  if (options.jobs < 1) throw UsageError("jobs must be positive");
  VerificationReport report;
  report.quantity = q;
  const int levels = n_last - n_first + 1;
  report.rows.resize(static_cast<std::size_t>(levels));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (int i = next++; i < levels; i = next++) {
      try {
        report.rows[static_cast<std::size_t>(i)] = verify_level(q, n_first + i, options);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min(options.jobs, levels);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const VerifyRow& row : report.rows) {
    ++report.summary.checked;
    switch (row.status) {
      case RowStatus::Match: ++report.summary.matched; break;
      case RowStatus::Mismatch:
        ++report.summary.mismatched;
        if (row.known) ++report.summary.known_mismatches;
        break;
      case RowStatus::OracleSkipped: ++report.summary.skipped; break;
      case RowStatus::FormulaOutOfRange: ++report.summary.out_of_range; break;
    }
  }
  return report;
}

}  // namespace sfg
