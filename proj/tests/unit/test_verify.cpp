#include <algorithm>

#include "doctest.h"
#include "sfg/errors.hpp"
#include "sfg/verify.hpp"

using namespace sfg;

namespace {

bool has_issue(const VerifyRow& row, const std::string& id) {
  return std::find(row.known_issues.begin(), row.known_issues.end(), id) != row.known_issues.end();
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("fractal matching n = 1..3 matches everywhere") {
    const auto report = run_verification({Model::Fractal, Problem::Matching}, 1, 3);
    REQUIRE(report.rows.size() == 3);
    const std::array<const char*, 3> sizes{"2", "6", "22"};
    const std::array<const char*, 3> counts{"2", "8", "128"};
    for (std::size_t i = 0; i < 3; ++i) {
      const VerifyRow& row = report.rows[i];
      CHECK(row.n == static_cast<int>(i) + 1);
      CHECK(row.status == RowStatus::Match);
      CHECK(row.headline.oracle == sizes[i]);
      CHECK(row.headline.recursion == sizes[i]);
      CHECK(row.headline.closed_form == sizes[i]);
      CHECK(row.count.oracle == counts[i]);
      CHECK(row.count.closed_form == counts[i]);
    }
    CHECK(report.summary.matched == 3);
    CHECK_FALSE(report.has_unexpected_mismatch());
  }

  TEST_CASE("non-fractal domination at n = 3") {
    const auto report = run_verification({Model::NonFractal, Problem::DominatingSet}, 3, 3,
                                         {.classified = true});
    const VerifyRow& row = report.rows.at(0);
    CHECK(row.status == RowStatus::Match);
    CHECK(row.headline.oracle == "4");
    CHECK(row.count.oracle == "1");
    REQUIRE(row.classified.has_value());
    CHECK((*row.classified)[0].oracle == "8");
    CHECK((*row.classified)[0].recursion == "8");
    CHECK_FALSE((*row.classified)[0].closed_form.has_value());
  }

  TEST_CASE("fractal independence at n = 1 is a known mismatch") {
    const auto report = run_verification({Model::Fractal, Problem::IndependentSet}, 1, 1);
    const VerifyRow& row = report.rows.at(0);
    CHECK(row.status == RowStatus::Mismatch);
    CHECK(row.known);
    CHECK(row.headline.oracle == "2");
    CHECK(row.headline.closed_form == "1");
    CHECK(has_issue(row, "fractal-independence-n1"));
    CHECK(report.summary.known_mismatches == 1);
    CHECK_FALSE(report.has_unexpected_mismatch());
  }

  TEST_CASE("fractal domination at n = 2 and 3 with classification") {
    const auto report = run_verification({Model::Fractal, Problem::DominatingSet}, 2, 3,
                                         {.classified = true});
    const VerifyRow& two = report.rows.at(0);
    CHECK(two.status == RowStatus::Mismatch);
    CHECK(two.known);
    CHECK(has_issue(two, "fractal-domination-gamma0-seed"));
    CHECK(has_issue(two, "fractal-domination-count-n2"));
    CHECK(two.count.oracle == "26");
    CHECK(two.headline.oracle == "3");

    const VerifyRow& three = report.rows.at(1);
    CHECK(three.headline.oracle == "8");
    CHECK(three.count.oracle == "16");
    CHECK((*three.classified)[0].oracle == "9");
    CHECK((*three.classified)[0].recursion == "10");
    CHECK(has_issue(three, "fractal-domination-gamma0-n3"));
    CHECK_FALSE(report.has_unexpected_mismatch());
  }

  TEST_CASE("rows outside the oracle's reach or the formulas' range") {
    const auto report = run_verification({Model::Fractal, Problem::Matching}, 0, 4);
    CHECK(report.rows.at(0).status == RowStatus::FormulaOutOfRange);
    CHECK(report.rows.at(0).headline.oracle == "1");
    CHECK(report.rows.at(4).status == RowStatus::OracleSkipped);
    CHECK_FALSE(report.rows.at(4).headline.oracle.has_value());
    CHECK(report.rows.at(4).headline.recursion == "86");
    CHECK(report.summary.skipped == 1);
    CHECK(report.summary.out_of_range == 1);
  }

  TEST_CASE("every quantity up to n = 3 has only known mismatches") {
    for (Quantity q : all_quantities()) {
      const auto report = run_verification(q, 0, 3, {.classified = true, .jobs = 4});
      CHECK_MESSAGE(!report.has_unexpected_mismatch(), to_string(q));
    }
  }

  TEST_CASE("row order and content do not depend on jobs") {
    const Quantity q{Model::NonFractal, Problem::Matching};
    const auto serial = run_verification(q, 0, 3, {.classified = true, .jobs = 1});
    const auto parallel = run_verification(q, 0, 3, {.classified = true, .jobs = 4});
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      CHECK(serial.rows[i].n == parallel.rows[i].n);
      CHECK(serial.rows[i].status == parallel.rows[i].status);
      CHECK(serial.rows[i].count.oracle == parallel.rows[i].count.oracle);
    }
  }

  TEST_CASE("triple comparison and argument checks") {
    CHECK_FALSE(Triple{"1", std::nullopt, std::nullopt}.disagrees());
    CHECK_FALSE(Triple{"1", "1", std::nullopt}.disagrees());
    CHECK(Triple{std::nullopt, "1", "2"}.disagrees());
    CHECK_THROWS_AS(run_verification({}, 3, 2), UsageError);
    CHECK_THROWS_AS(run_verification({}, 0, 1, {.jobs = 0}), UsageError);
    CHECK(to_string(RowStatus::OracleSkipped) == "oracle-skipped");
  }
}
