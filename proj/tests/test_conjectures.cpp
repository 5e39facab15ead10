#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "passnim/conjectures.hpp"
#include "passnim/errors.hpp"

using namespace passnim;

namespace {

struct FamilyTable {
  GrundyTable table;
  PeriodCertificate cert;
};

FamilyTable certified_table(const SubtractionSet& rule) {
  const DetectBounds bounds = default_bounds(rule);
  GrundyTable table = grundy_table(rule, bounds.max_preperiod + 2 * bounds.max_period + rule.max());
  const PeriodCertificate cert = detect_period(table, bounds);
  return {std::move(table), cert};
}

}  // namespace

TEST_CASE("dist on the n=3 family") {
  const auto [table, cert] = certified_table(SubtractionSet{2, 12, 14});
  REQUIRE(cert.preperiod == 0);
  REQUIRE(cert.period == 24);
  CHECK(dist(table, cert, 24) == 8);
  CHECK(dist(table, cert, 1) == 8);
  CHECK(dist(table, cert, 4) == 2);  // 4 - 2*2 lifts to 24, a P-position
  CHECK_THROWS_AS(dist(table, cert, 2), std::invalid_argument);   // N-position
  CHECK_THROWS_AS(dist(table, cert, -1), std::invalid_argument);  // below q+1
}

TEST_CASE("dist minimality") {
  const auto [table, cert] = certified_table(SubtractionSet{2, 12, 14});
  const DistTable dt = dist_table(table, cert);
  const std::int64_t s1 = table.rule.min();
  for (const DistEntry& entry : dt.entries) {
    REQUIRE(entry.steps.has_value());
    const std::int64_t k = *entry.steps;
    CHECK(table.values[window_mod(entry.w - k * s1, cert)] == 0);
    for (std::int64_t j = 1; j < k; ++j) {
      CHECK(table.values[window_mod(entry.w - j * s1, cert)] != 0);
    }
  }
}

TEST_CASE("dist table lists exactly the P-position representatives") {
  const auto [table, cert] = certified_table(SubtractionSet{2, 12, 14});
  const DistTable dt = dist_table(table, cert);
  std::vector<std::int64_t> ws;
  std::vector<std::int64_t> steps;
  for (const DistEntry& e : dt.entries) {
    ws.push_back(e.w);
    steps.push_back(e.steps.value());
  }
  CHECK(ws == std::vector<std::int64_t>{1, 4, 5, 8, 9, 24});
  CHECK(steps == std::vector<std::int64_t>{8, 2, 2, 2, 2, 8});
}

TEST_CASE("dist can come up empty") {
  // A fabricated table whose only P-position is unreachable by s1 steps.
  std::vector<GrundyValue> values(40, 1);
  values[5] = 0;
  const GrundyTable table{SubtractionSet{2}, values};
  const PeriodCertificate cert{0, 3, 1, 7, true};
  CHECK(dist(table, cert, 5) == std::nullopt);
}

TEST_CASE("condition (a) for the n=3 family") {
  const auto [table, cert] = certified_table(SubtractionSet{2, 12, 14});
  const ConditionAReport report = check_condition_a(table, cert);
  CHECK(report.holds);
  REQUIRE(report.witnesses.size() == 2);
  CHECK(report.witnesses[0].w == 1);
  CHECK(report.witnesses[0].steps == 8);
  CHECK_FALSE(report.witnesses[0].plus_s3_minus_s1_is_p);
  CHECK(report.witnesses[0].plus_s3_minus_3s1_is_p);
  CHECK(report.witnesses[1].w == 24);
  CHECK(report.witnesses[1].steps == 8);
}

TEST_CASE("condition (a) holds vacuously when nothing is in scope") {
  // {1}: the only windowed P-position has dist 2, below the m >= 2 cutoff.
  const auto [table, cert] = certified_table(SubtractionSet{1});
  const ConditionAReport report = check_condition_a(table, cert);
  CHECK(report.holds);
  CHECK(report.witnesses.empty());
}

TEST_CASE("condition (a) across all s3 = s1 + s2 sets up to 16") {
  for (std::int64_t s1 = 1; s1 <= 7; ++s1) {
    for (std::int64_t s2 = s1 + 1; s1 + s2 <= 16; ++s2) {
      const auto [table, cert] = certified_table(SubtractionSet{s1, s2, s1 + s2});
      CHECK(check_condition_a(table, cert).holds);
    }
  }
}

TEST_CASE("reverse-mex iff condition (a): the proven family") {
  const AgreementRecord record = test_reverse_mex_iff_condition_a(SubtractionSet{2, 12, 14});
  CHECK(record.reverse_mex_holds);
  CHECK(record.reverse_mex_from_one);
  CHECK(record.condition_a_holds);
  CHECK(record.agree());
}

TEST_CASE("agreement uses the periodic window") {
  // {1,4,10} violates reverse-mex in the preperiod only; inside the loop
  // both sides hold and the record says so.
  const AgreementRecord record = test_reverse_mex_iff_condition_a(SubtractionSet{1, 4, 10});
  CHECK(record.reverse_mex_holds);
  CHECK_FALSE(record.reverse_mex_from_one);
  CHECK(record.condition_a_holds);
  CHECK(record.agree());
}

TEST_CASE("fault injection produces a visible disagreement") {
  const auto [clean, cert] = certified_table(SubtractionSet{2, 12, 14});
  GrundyTable corrupted = clean;
  const std::int64_t target = cert.preperiod + 2 * cert.period + 1;
  corrupted.values[target] = corrupted.values[target] == 0 ? 1 : 0;
  const AgreementRecord record = test_reverse_mex_iff_condition_a(corrupted, cert);
  CHECK_FALSE(record.reverse_mex_holds);   // the corruption breaks this side
  CHECK(record.condition_a_holds);         // window lookups never reach it
  CHECK_FALSE(record.agree());
}

TEST_CASE("family constructors") {
  CHECK(family_rule(Family::A, 2, 3) == SubtractionSet({2, 12, 14}));
  CHECK(family_rule(Family::B, 1, 1) == SubtractionSet({1, 3, 5}));
  CHECK(family_rule(Family::C, 3, 2) == SubtractionSet({3, 15, 27}));
  CHECK(family_pass_threshold(Family::A, 2, 3) == 45);
  CHECK(family_pass_threshold(Family::B, 1, 1) == 6);
  CHECK(family_pass_threshold(Family::C, 3, 2) == 28);
  CHECK_THROWS_AS(family_rule(Family::A, 0, 3), std::invalid_argument);
  CHECK(parse_family("B") == Family::B);
  CHECK_THROWS_AS(parse_family("D"), std::invalid_argument);
}

TEST_CASE("family A sweep at a=2 passes every check") {
  const FamilySweepReport report = sweep_family(Family::A, 2, 2, 3, 6);
  REQUIRE(report.cells.size() == 4);
  for (const SweepCell& cell : report.cells) {
    INFO("n = " << cell.n);
    REQUIRE(cell.computed());
    CHECK(cell.all_checks_pass());
    CHECK(cell.stated_threshold == 12 * cell.n + 9);
    CHECK(cell.empirical_threshold == cell.stated_threshold);
    CHECK(cell.loop_period == 8 * cell.n);
    CHECK(cell.loop_preperiod + 1 == 12 * cell.n + 9);
    CHECK(cell.max_pass_value == 4);
  }
}

TEST_CASE("conjectural boundary cells are flagged, not asserted") {
  // Family B at a=1, n=1 fails pass-independence exactly at the stated
  // threshold; the loop itself starts there as conjectured.
  const FamilySweepReport b = sweep_family(Family::B, 1, 1, 1, 1);
  REQUIRE(b.cells.size() == 1);
  const SweepCell& cell = b.cells[0];
  REQUIRE(cell.computed());
  CHECK(cell.reverse_mex_all);
  CHECK_FALSE(cell.independence_from_threshold);
  CHECK(cell.empirical_threshold == 7);  // stated 6
  CHECK(cell.pass_reverse_mex_from_threshold);
  CHECK(cell.loop_within_threshold);
  CHECK(cell.max_pass_value == 2);
  CHECK_FALSE(cell.all_checks_pass());

  // Family A at a=3, n=2: the loop starts past the conjectured onset.
  const FamilySweepReport a = sweep_family(Family::A, 3, 3, 2, 2);
  REQUIRE(a.cells.size() == 1);
  CHECK(a.cells[0].computed());
  CHECK(a.cells[0].loop_preperiod + 1 == 55);
  CHECK_FALSE(a.cells[0].loop_within_threshold);  // stated 49
  CHECK_FALSE(a.cells[0].all_checks_pass());
}

TEST_CASE("row1 stays below 4 for families B and C on the default grid") {
  for (Family f : {Family::B, Family::C}) {
    const FamilySweepReport report = sweep_family(f, 1, 2, 1, 3);
    for (const SweepCell& cell : report.cells) {
      REQUIRE(cell.computed());
      CHECK(cell.max_pass_value < 4);
    }
  }
}

TEST_CASE("capacity problems turn into per-cell skips") {
  const FamilySweepReport report = sweep_family(Family::C, 3000, 3000, 6, 6);
  REQUIRE(report.cells.size() == 1);
  CHECK_FALSE(report.cells[0].computed());
  CHECK_FALSE(report.cells[0].skip_reason.empty());
}

TEST_CASE("sweep grid validation") {
  CHECK_THROWS_AS(sweep_family(Family::A, 0, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sweep_family(Family::A, 2, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sweep_family(Family::A, 1, 1, 1, 2, 0), std::invalid_argument);
}
