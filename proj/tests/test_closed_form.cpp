#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "passnim/closed_form.hpp"

using namespace passnim;

TEST_CASE("closed_form_rule") {
  CHECK(closed_form_rule(3) == SubtractionSet({2, 12, 14}));
  CHECK_THROWS_AS(closed_form_rule(2), std::invalid_argument);
}

TEST_CASE("grundy_closed spot values") {
  CHECK(grundy_closed(3, 0) == 0);
  CHECK(grundy_closed(3, 14) == 3);
  CHECK(grundy_closed(3, 26) == 1);
  CHECK(grundy_closed(3, 12) == 2);
  CHECK_THROWS_AS(grundy_closed(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(grundy_closed(3, -1), std::invalid_argument);
}

TEST_CASE("closed form equals the DP") {
  for (std::int64_t n = 3; n <= 6; ++n) {
    const GrundyTable table = grundy_table(closed_form_rule(n), 10 * 8 * n);
    for (std::int64_t x = 0; x <= table.limit(); ++x) {
      CHECK(grundy_closed(n, x) == table.values[x]);
    }
  }
}

TEST_CASE("prefix pattern structure") {
  const BlockPattern prefix = pass_prefix_pattern();
  REQUIRE(prefix.segments.size() == 8);
  const std::vector<std::string> names{"A", "B", "C", "D", "E", "F", "B", "G"};
  const std::vector<std::pair<std::int64_t, std::int64_t>> exponents{
      {0, 1}, {1, -1}, {0, 1}, {0, 1}, {1, -2}, {0, 1}, {1, -2}, {0, 1}};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(prefix.segments[i].name == names[i]);
    CHECK(prefix.segments[i].n_coeff == exponents[i].first);
    CHECK(prefix.segments[i].n_offset == exponents[i].second);
  }
  CHECK(prefix.segments[0].values == std::vector<GrundyValue>{0, 1, 2, 0});
  CHECK(prefix.segments[5].values == std::vector<GrundyValue>{3, 1, 0, 0, 1, 1, 3, 0});
  CHECK(prefix.segments[7].values == std::vector<GrundyValue>{1, 3, 2, 2, 3, 3, 0, 2, 4});
}

TEST_CASE("prefix expansion") {
  CHECK(pass_prefix_values(3).size() == 45);
  for (std::int64_t n = 3; n <= 8; ++n) {
    CHECK(pass_prefix_pattern().expanded_length(n) == 12 * n + 9);
    CHECK(static_cast<std::int64_t>(pass_prefix_values(n).size()) == 12 * n + 9);
  }
  const auto prefix = pass_prefix_values(3);
  CHECK(prefix[0] == 0);
  CHECK(prefix[1] == 1);
  CHECK(prefix[2] == 2);
  CHECK(prefix[3] == 0);
  CHECK(prefix[14] == 4);  // lands in block C
  CHECK_THROWS_AS(pass_prefix_values(2), std::invalid_argument);
}

TEST_CASE("loop expansion") {
  for (std::int64_t n = 3; n <= 8; ++n) {
    CHECK(static_cast<std::int64_t>(pass_loop_values(n).size()) == 8 * n);
  }
  const auto loop = pass_loop_values(3);
  CHECK(loop[45 - 45] == 3);  // x = 12n+9
  CHECK(loop[68 - 45] == 3);  // x = 20n+8, last entry of S
  CHECK_THROWS_AS(pass_loop_values(2), std::invalid_argument);
}

TEST_CASE("prefix and loop stitch together") {
  for (std::int64_t n = 3; n <= 8; ++n) {
    const auto prefix = pass_prefix_values(n);
    const auto loop = pass_loop_values(n);
    CHECK(prefix.back() == 4);   // G ends with the second 4
    CHECK(loop.front() == 3);    // P starts the loop
  }
}

TEST_CASE("the loop differs from the aligned prefix tail only at the very end") {
  // Over the last 4n+2 entries, x = 8n+7..12n+8 against x+8n, the single
  // difference is the 4 at 12n+8 vs the 3 at 20n+8.
  for (std::int64_t n = 3; n <= 8; ++n) {
    const auto prefix = pass_prefix_values(n);
    std::vector<std::int64_t> mismatches;
    for (std::int64_t x = 8 * n + 7; x <= 12 * n + 8; ++x) {
      if (prefix[x] != grundy_pass_closed(n, x + 8 * n)) mismatches.push_back(x);
    }
    CHECK(mismatches == std::vector<std::int64_t>{12 * n + 8});
    CHECK(prefix[12 * n + 8] == 4);
    CHECK(grundy_pass_closed(n, 20 * n + 8) == 3);
  }
}

TEST_CASE("grundy_pass_closed") {
  CHECK(grundy_pass_closed(3, 14) == 4);
  for (std::int64_t t = 0; t <= 5; ++t) {
    CHECK(grundy_pass_closed(3, 45 + 24 * t) == 3);
  }
  CHECK_THROWS_AS(grundy_pass_closed(2, 0), std::invalid_argument);

  // piecewise evaluator agrees with the raw expansions
  for (std::int64_t n = 3; n <= 6; ++n) {
    const auto prefix = pass_prefix_values(n);
    for (std::int64_t x = 0; x <= 12 * n + 8; ++x) {
      CHECK(grundy_pass_closed(n, x) == prefix[x]);
    }
    const auto loop = pass_loop_values(n);
    for (std::int64_t x = 12 * n + 9; x <= 12 * n + 8 + 16 * n; ++x) {
      CHECK(grundy_pass_closed(n, x) == loop[(x - (12 * n + 9)) % (8 * n)]);
    }
  }
}

TEST_CASE("pass closed form equals the DP") {
  const PassGrundyTable table = pass_grundy_table(closed_form_rule(3), 2000);
  for (std::int64_t x = 0; x <= 2000; ++x) {
    CHECK(grundy_pass_closed(3, x) == table.row1[x]);
  }
}
