#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "passnim/checks.hpp"
#include "passnim/closed_form.hpp"

using namespace passnim;

TEST_CASE("reverse-mex holds for the family, both variants") {
  const SubtractionSet rule{2, 12, 14};
  const GrundyTable table = grundy_table(rule, 514);
  const CheckReport plain = check_reverse_mex(table, 1, 500);
  CHECK(plain.passed());
  CHECK(plain.property_name == "reverse-mex");
  CHECK(plain.lo == 1);
  CHECK(plain.hi == 500);

  const PassGrundyTable pass_table = pass_grundy_table(rule, 514);
  CHECK(check_reverse_mex_pass(pass_table, 45, 500).passed());
}

TEST_CASE("reverse-mex violations are listed in full") {
  // {1,2,3} happens to satisfy the property everywhere; {1,4,10} does not.
  const GrundyTable clean = grundy_table(SubtractionSet{1, 2, 3}, 510);
  CHECK(check_reverse_mex(clean, 1, 500).passed());

  const GrundyTable dirty = grundy_table(SubtractionSet{1, 4, 10}, 200);
  const CheckReport report = check_reverse_mex(dirty, 1, 100);
  REQUIRE(report.violations.size() == 4);
  CHECK(report.violations[0] == Violation{10, 0, 3});
  CHECK(report.violations[1] == Violation{11, 1, 2});
  CHECK(report.violations[2] == Violation{12, 2, 3});
  CHECK(report.violations[3] == Violation{15, 2, 3});
}

TEST_CASE("reverse-mex range needs headroom") {
  const GrundyTable table = grundy_table(SubtractionSet{2, 12, 14}, 100);
  CHECK_THROWS_AS(check_reverse_mex(table, 1, 90), std::out_of_range);
  CHECK_NOTHROW(check_reverse_mex(table, 1, 86));
  CHECK_THROWS_AS(check_reverse_mex(table, 5, 4), std::invalid_argument);
}

TEST_CASE("pass row reverse-mex below the threshold") {
  const SubtractionSet rule{2, 12, 14};
  const PassGrundyTable table = pass_grundy_table(rule, 200);
  const CheckReport report = check_reverse_mex_pass(table, 1, 44);
  std::vector<std::int64_t> xs;
  for (const Violation& v : report.violations) xs.push_back(v.x);
  CHECK(xs == std::vector<std::int64_t>{14, 18, 30, 44});
  // largest pre-loop violation sits right at 12n+8
  CHECK(xs.back() == 44);
}

TEST_CASE("pass-independence threshold behavior for n=3") {
  const SubtractionSet rule{2, 12, 14};
  const PassGrundyTable table = pass_grundy_table(rule, 600);
  CHECK(check_pass_independence(table, 45, 500).passed());
  CHECK(check_pass_independence(table, 45, 45).passed());
  CHECK_FALSE(check_pass_independence(table, 14, 14).passed());

  const CheckReport below = check_pass_independence(table, 14, 44);
  std::vector<std::int64_t> xs;
  for (const Violation& v : below.violations) xs.push_back(v.x);
  CHECK(xs == std::vector<std::int64_t>{14, 32, 44});

  CHECK(last_independence_violation(table, 500) == 44);
  CHECK(empirical_independence_threshold(table, 500) == 45);

  CHECK_THROWS_AS(check_pass_independence(table, 13, 44), std::invalid_argument);
  CHECK_THROWS_AS(check_pass_independence(table, 14, 601), std::out_of_range);
}

TEST_CASE("independence threshold when no violation exists at all") {
  // A row1 that is itself a plain Grundy row never needs the pass term.
  const SubtractionSet rule{1, 2};
  const GrundyTable plain = grundy_table(rule, 100);
  const PassGrundyTable fabricated{rule, plain.values, plain.values};
  CHECK(last_independence_violation(fabricated, 100) == std::nullopt);
  CHECK(empirical_independence_threshold(fabricated, 100) == rule.max());
}

TEST_CASE("block theorem verification") {
  for (std::int64_t n : {3, 8}) {
    const PassGrundyTable table = pass_grundy_table(closed_form_rule(n), 20 * n + 8);
    CHECK(verify_block_theorem(n, table).passed());
  }

  PassGrundyTable corrupted = pass_grundy_table(closed_form_rule(3), 68);
  corrupted.row1[20] ^= 1;
  const CheckReport report = verify_block_theorem(3, corrupted);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].x == 20);
  CHECK(report.violations[0].actual == (report.violations[0].expected ^ 1));

  const PassGrundyTable wrong_rule = pass_grundy_table(SubtractionSet{2, 12, 16}, 68);
  CHECK_THROWS_AS(verify_block_theorem(3, wrong_rule), std::invalid_argument);
  const PassGrundyTable too_short = pass_grundy_table(closed_form_rule(3), 60);
  CHECK_THROWS_AS(verify_block_theorem(3, too_short), std::out_of_range);
}

TEST_CASE("closed-form theorem verification") {
  CHECK(verify_closed_form_theorem(3, grundy_table(closed_form_rule(3), 240), 10).passed());
  CHECK(verify_closed_form_theorem(10, grundy_table(closed_form_rule(10), 400), 5).passed());

  const GrundyTable wrong_rule = grundy_table(SubtractionSet{2, 12, 16}, 240);
  CHECK_THROWS_AS(verify_closed_form_theorem(3, wrong_rule, 10), std::invalid_argument);

  GrundyTable corrupted = grundy_table(closed_form_rule(3), 240);
  corrupted.values[100] = 3;
  const CheckReport report = verify_closed_form_theorem(3, corrupted, 10);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == Violation{100, grundy_closed(3, 100), 3});
}
