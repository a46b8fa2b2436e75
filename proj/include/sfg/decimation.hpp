#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfg/bigint.hpp"
#include "sfg/graph.hpp"
#include "sfg/oracle.hpp"

// Level-to-level recurrences for the boundary-classified optima (k = number of boundary
// vertices touched) and for the number of optimal solutions, plus their closed forms.

namespace sfg {

struct Quantity {
  Model model = Model::Fractal;
  Problem problem = Problem::Matching;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

/// The six (model, problem) combinations, fractal first, in problem order.
std::array<Quantity, 6> all_quantities();

/// "fractal/matching", "nonfractal/mds", ...
std::string to_string(Quantity q);

/// First level at which the size recurrence is seeded: 1, 1, 1, 1, 2, 3 in the order
/// fractal/nonfractal matching, fractal/nonfractal mis, fractal/nonfractal mds.
int size_base_level(Quantity q);

/// First level at which the counting recurrence is seeded: 1 everywhere except 2 for
/// domination.
int count_base_level(Quantity q);

/// Largest level the int64 size recurrences and closed forms accept.
inline constexpr int kMaxSizeLevel = 30;

struct SizeTriple {
  int level = 0;
  Problem problem = Problem::Matching;
  /// Classified optimum for k = 0, 1, 2. Empty when no solution touches exactly k boundary
  /// vertices (k = 2 for independent sets of the non-fractal family).
  std::array<std::optional<std::int64_t>, 3> s;

  /// max over feasible entries for matching and independence, min for domination.
  std::int64_t headline() const;

  friend bool operator==(const SizeTriple&, const SizeTriple&) = default;
};

/// One candidate of a max/min recurrence:
/// c[0] * s0 + c[1] * s1 + c[2] * s2 + constant, evaluated on the previous level.
struct Term {
  std::array<int, 3> c{};
  int constant = 0;
};

/// The middle candidate of the domination k = 1 recurrence is printed with a repeated
/// s1 summand. Literal keeps it as printed (s0 + 3 s1 - 2); Corrected reads the last s1
/// as s2 (s0 + 2 s1 + s2 - 2).
enum class GammaOneForm : std::uint8_t { Literal, Corrected };

struct RecursionOptions {
  GammaOneForm gamma_one = GammaOneForm::Literal;
};

/// Candidates of the recurrence for component k. Empty for an infeasible component.
std::span<const Term> recurrence_terms(Quantity q, int k, const RecursionOptions& options = {});

/// The seed triple at size_base_level(q).
SizeTriple size_seed(Quantity q);

struct LevelRecord {
  SizeTriple sizes;
  /// Indices into recurrence_terms(q, k) of every candidate attaining the max/min that
  /// produced sizes.s[k]. Empty at the seed level.
  std::array<std::vector<int>, 3> attaining;
};

/// Levels size_base_level(q) .. n. Throws UsageError for n below the base level and
/// CapabilityError above kMaxSizeLevel.
std::vector<LevelRecord> size_trajectory(Quantity q, int n, const RecursionOptions& options = {});

SizeTriple size_recursion(Quantity q, int n, const RecursionOptions& options = {});

/// First level from which a closed form is accepted. Headline ranges follow the
/// printed ones except fractal independence, which starts at 2 because the formula gives
/// 1 on G_1 whose independence number is 2.
int headline_first_level(Quantity q);
/// Nullopt when component k has no closed form (it is infeasible). The non-fractal
/// domination k = 0 form starts at 4: at n = 3 it gives 10 while the seed and the exact
/// optimum are 8.
std::optional<int> component_first_level(Quantity q, int k);

/// Range as printed next to each formula. Differs from headline_first_level only for
/// fractal independence (1 instead of 2).
int headline_stated_first_level(Quantity q);

/// Enforced applies the artifact's validity ranges; Stated evaluates a headline formula
/// over its printed range so that verification can show where it fails.
enum class ClosedFormRange : std::uint8_t { Enforced, Stated };

/// Headline closed form. Throws RangeError outside the validity range.
std::int64_t headline_closed_form(Quantity q, int n, ClosedFormRange range = ClosedFormRange::Enforced);
/// Component k closed form. Throws RangeError outside the validity range or when the
/// component has none.
std::int64_t component_closed_form(Quantity q, int k, int n);

struct SizeClosedForm {
  /// Components whose closed form is in range at n; others are empty.
  std::array<std::optional<std::int64_t>, 3> components;
  std::int64_t headline = 0;
};

/// Throws RangeError when the headline formula is out of range at n.
SizeClosedForm size_closed_form(Quantity q, int n);

struct CountState {
  int level = 0;
  std::optional<BigInt> theta;   // matching: optimal matchings saturating both boundary vertices
  std::optional<BigInt> phi;     // matching: optimal matchings saturating neither
  std::optional<BigInt> varphi;  // non-fractal matching: per designated hub, saturating only it
  std::optional<BigInt> x;       // independence
  std::optional<BigInt> y;       // domination

  /// The field that counts optimal solutions of the whole graph (theta, x or y).
  const BigInt& headline(Problem problem) const;
};

struct CountOptions {
  /// Largest bit length any count may reach before CapabilityError.
  std::uint64_t bit_budget = std::uint64_t{1} << 24;
};

/// Levels count_base_level(q) .. n.
std::vector<CountState> count_trajectory(Quantity q, int n, const CountOptions& options = {});

CountState count_recursion(Quantity q, int n, const CountOptions& options = {});

/// Closed form of the headline count, nullopt for non-fractal matching which has none.
/// Throws UsageError below count_base_level(q) and CapabilityError past the bit budget.
std::optional<BigInt> count_closed_form(Quantity q, int n, const CountOptions& options = {});

struct SelfCheckMismatch {
  int level = 0;
  /// "s0", "s1", "s2", "headline" or "count".
  std::string field;
  std::string recursion_value;
  std::string closed_form_value;
};

struct SelfCheckReport {
  Quantity quantity;
  int n_max = 0;
  int levels_checked = 0;
  std::vector<SelfCheckMismatch> mismatches;

  bool consistent() const { return mismatches.empty(); }
};

/// Compares recursion and closed forms at every level up to n_max wherever a closed form
/// is in range. Mismatches are reported, never thrown.
SelfCheckReport self_check(Quantity q, int n_max, const RecursionOptions& recursion = {},
                           const CountOptions& counts = {});

}  // namespace sfg
