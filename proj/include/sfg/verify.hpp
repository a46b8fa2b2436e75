#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfg/decimation.hpp"
#include "sfg/oracle.hpp"

// Cross-checks exact oracle results against the recurrences and closed forms, level by
// level, and classifies every disagreement as known or unexpected.

namespace sfg {

enum class RowStatus : std::uint8_t { Match, Mismatch, OracleSkipped, FormulaOutOfRange };

std::string_view to_string(RowStatus status);

/// A documented disagreement between the published values and the exact oracle.
struct KnownIssue {
  std::string id;
  Quantity quantity;
  /// "headline", "count", "s0", "s1" or "s2".
  std::string field;
  int first_level = 0;
  /// Inclusive; nullopt means unbounded.
  std::optional<int> last_level;
  std::string description;
};

const std::vector<KnownIssue>& known_issues();

/// The three routes to one value. Missing entries were not computed or are out of range.
struct Triple {
  std::optional<std::string> oracle;
  std::optional<std::string> recursion;
  std::optional<std::string> closed_form;

  /// True when at least two entries are present and any two present entries differ.
  bool disagrees() const;
};

struct VerifyRow {
  int n = 0;
  Triple headline;
  Triple count;
  /// Per classified component k; filled only when classification was requested.
  std::optional<std::array<Triple, 3>> classified;
  RowStatus status = RowStatus::Match;
  /// Fields that disagree, e.g. {"count", "s0"}.
  std::vector<std::string> mismatched_fields;
  /// Ids of the known issues covering every mismatched field; empty otherwise.
  std::vector<std::string> known_issues;
  bool known = false;
  std::string note;
  double elapsed_ms = 0;
};

struct VerifySummary {
  int checked = 0;
  int matched = 0;
  int mismatched = 0;
  int known_mismatches = 0;
  int skipped = 0;
  int out_of_range = 0;
};

struct VerificationReport {
  Quantity quantity;
  std::vector<VerifyRow> rows;
  VerifySummary summary;

  /// A mismatch not covered by the known-issue allowlist.
  bool has_unexpected_mismatch() const { return summary.mismatched > summary.known_mismatches; }
};

struct VerifyOptions {
  OracleBudget budget;
  bool classified = false;
  /// Levels solved concurrently; row order does not depend on it.
  int jobs = 1;
  RecursionOptions recursion;
  CountOptions counts;
};

/// Rows for n_first .. n_last. Oracle budget exhaustion marks a row OracleSkipped.
VerificationReport run_verification(Quantity q, int n_first, int n_last,
                                    const VerifyOptions& options = {});

}  // namespace sfg
