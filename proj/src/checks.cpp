#include "passnim/checks.hpp"

#include <stdexcept>
#include <string>

#include "passnim/closed_form.hpp"

namespace passnim {

namespace {

void require_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || hi < lo) {
    throw std::invalid_argument("bad check range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

}  // namespace

CheckReport check_reverse_mex(std::span<const GrundyValue> values, const SubtractionSet& rule,
                              std::int64_t lo, std::int64_t hi) {
  require_range(lo, hi);
  const std::int64_t limit = static_cast<std::int64_t>(values.size()) - 1;
  const std::int64_t maxs = rule.max();
  if (hi + maxs > limit) {
    throw std::out_of_range("reverse-mex up to " + std::to_string(hi) + " needs values up to " +
                            std::to_string(hi + maxs) + ", table ends at " +
                            std::to_string(limit));
  }
  CheckReport report{"reverse-mex", rule, lo, hi, {}};
  const auto& s = rule.amounts();
  std::vector<GrundyValue> successors(s.size());
  for (std::int64_t x = lo; x <= hi; ++x) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      successors[i] = values[static_cast<std::size_t>(x + s[i])];
    }
    const int predicted = mex(successors);
    const int actual = values[static_cast<std::size_t>(x)];
    if (predicted != actual) report.violations.push_back({x, predicted, actual});
  }
  return report;
}

CheckReport check_reverse_mex(const GrundyTable& table, std::int64_t lo, std::int64_t hi) {
  return check_reverse_mex(table.values, table.rule, lo, hi);
}

CheckReport check_reverse_mex_pass(const PassGrundyTable& table, std::int64_t lo,
                                   std::int64_t hi) {
  return check_reverse_mex(table.row1, table.rule, lo, hi);
}

CheckReport check_pass_independence(const PassGrundyTable& table, std::int64_t lo,
                                    std::int64_t hi) {
  require_range(lo, hi);
  const std::int64_t maxs = table.rule.max();
  if (lo < maxs) {
    throw std::invalid_argument("pass-independence needs lo >= max(rule) = " +
                                std::to_string(maxs));
  }
  if (hi > table.limit()) {
    throw std::out_of_range("range end " + std::to_string(hi) + " past table limit " +
                            std::to_string(table.limit()));
  }
  CheckReport report{"pass-independence", table.rule, lo, hi, {}};
  const auto& s = table.rule.amounts();
  std::vector<GrundyValue> options(s.size());
  for (std::int64_t x = lo; x <= hi; ++x) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      options[i] = table.row1[static_cast<std::size_t>(x - s[i])];
    }
    const int predicted = mex(options);  // pass term dropped
    const int actual = table.row1[static_cast<std::size_t>(x)];
    if (predicted != actual) report.violations.push_back({x, predicted, actual});
  }
  return report;
}

std::optional<std::int64_t> last_independence_violation(const PassGrundyTable& table,
                                                        std::int64_t hi) {
  const std::int64_t maxs = table.rule.max();
  if (hi > table.limit()) {
    throw std::out_of_range("range end past table limit");
  }
  const auto& s = table.rule.amounts();
  std::vector<GrundyValue> options(s.size());
  for (std::int64_t x = hi; x >= maxs; --x) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      options[i] = table.row1[static_cast<std::size_t>(x - s[i])];
    }
    if (mex(options) != table.row1[static_cast<std::size_t>(x)]) return x;
  }
  return std::nullopt;
}

std::int64_t empirical_independence_threshold(const PassGrundyTable& table, std::int64_t hi) {
  const auto worst = last_independence_violation(table, hi);
  return worst ? *worst + 1 : table.rule.max();
}

CheckReport verify_block_theorem(std::int64_t n, const PassGrundyTable& table) {
  const SubtractionSet expected_rule = closed_form_rule(n);  // validates n >= 3
  if (table.rule != expected_rule) {
    throw std::invalid_argument("table built from " + table.rule.to_string() + ", expected " +
                                expected_rule.to_string());
  }
  if (table.limit() < 20 * n + 8) {
    throw std::out_of_range("block check needs the table up to " + std::to_string(20 * n + 8));
  }
  CheckReport report{"block-decomposition", table.rule, 0, 20 * n + 8, {}};
  const auto prefix = pass_prefix_values(n);
  for (std::int64_t x = 0; x <= 12 * n + 8; ++x) {
    const int expected = prefix[static_cast<std::size_t>(x)];
    const int actual = table.row1[static_cast<std::size_t>(x)];
    if (expected != actual) report.violations.push_back({x, expected, actual});
  }
  const auto loop = pass_loop_values(n);
  for (std::int64_t x = 12 * n + 9; x <= 20 * n + 8; ++x) {
    const int expected = loop[static_cast<std::size_t>(x - (12 * n + 9))];
    const int actual = table.row1[static_cast<std::size_t>(x)];
    if (expected != actual) report.violations.push_back({x, expected, actual});
  }
  return report;
}

CheckReport verify_closed_form_theorem(std::int64_t n, const GrundyTable& table,
                                       std::int64_t periods) {
  const SubtractionSet expected_rule = closed_form_rule(n);
  if (table.rule != expected_rule) {
    throw std::invalid_argument("table built from " + table.rule.to_string() + ", expected " +
                                expected_rule.to_string());
  }
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  const std::int64_t hi = periods * 8 * n;
  if (table.limit() < hi) {
    throw std::out_of_range("closed-form check needs the table up to " + std::to_string(hi));
  }
  CheckReport report{"closed-form", table.rule, 0, hi, {}};
  for (std::int64_t x = 0; x <= hi; ++x) {
    const int expected = grundy_closed(n, x);
    const int actual = table.values[static_cast<std::size_t>(x)];
    if (expected != actual) report.violations.push_back({x, expected, actual});
  }
  return report;
}

}  // namespace passnim
