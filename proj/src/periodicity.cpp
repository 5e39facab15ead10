#include "passnim/periodicity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "passnim/errors.hpp"

namespace passnim {

namespace {

// Window match: values[x+p] == values[x] for x in [q+1, q+p+maxs]. Each
// entry is determined by the previous maxs entries, so a match here
// propagates to all larger x.
bool window_matches(std::span<const GrundyValue> values, std::int64_t q, std::int64_t p,
                    std::int64_t maxs) {
  const std::int64_t hi = q + p + maxs;
  for (std::int64_t x = q + 1; x <= hi; ++x) {
    if (values[x + p] != values[x]) return false;
  }
  return true;
}

void require_length(std::int64_t limit, const DetectBounds& b, std::int64_t maxs) {
  const std::int64_t need = b.max_preperiod + 2 * b.max_period + maxs;
  if (limit < need) {
    throw std::invalid_argument("need values up to " + std::to_string(need) +
                                " for these detection bounds, have " + std::to_string(limit));
  }
}

void validate_bounds(const DetectBounds& b) {
  if (b.max_preperiod < 0 || b.max_period < 1) {
    throw std::invalid_argument("detection bounds must allow q >= 0 and p >= 1");
  }
}

PeriodCertificate make_cert(std::int64_t q, std::int64_t p, std::int64_t maxs) {
  return PeriodCertificate{q, p, q + 1, q + 2 * p + maxs, true};
}

// row1[x] == mex of the subtraction options alone, for every x in [lo, hi].
bool pass_term_droppable(const PassGrundyTable& table, std::int64_t lo, std::int64_t hi) {
  const auto& s = table.rule.amounts();
  std::vector<GrundyValue> options;
  options.reserve(s.size());
  for (std::int64_t x = lo; x <= hi; ++x) {
    options.clear();
    for (std::int64_t a : s) {
      if (a > x) break;
      options.push_back(table.row1[x - a]);
    }
    if (mex(options) != table.row1[x]) return false;
  }
  return true;
}

}  // namespace

DetectBounds default_bounds(const SubtractionSet& rule) {
  const std::int64_t maxs = rule.max();
  return DetectBounds{4 * maxs * maxs, 2 * maxs * maxs};
}

PeriodCertificate detect_period(std::span<const GrundyValue> values, const SubtractionSet& rule,
                                std::optional<DetectBounds> bounds) {
  const DetectBounds b = bounds.value_or(default_bounds(rule));
  validate_bounds(b);
  const std::int64_t maxs = rule.max();
  require_length(static_cast<std::int64_t>(values.size()) - 1, b, maxs);
  for (std::int64_t q = 0; q <= b.max_preperiod; ++q) {
    for (std::int64_t p = 1; p <= b.max_period; ++p) {
      if (window_matches(values, q, p, maxs)) return make_cert(q, p, maxs);
    }
  }
  throw period_not_found_error("no period found for " + rule.to_string() +
                               " within q <= " + std::to_string(b.max_preperiod) +
                               ", p <= " + std::to_string(b.max_period));
}

PeriodCertificate detect_period(const GrundyTable& table, std::optional<DetectBounds> bounds) {
  return detect_period(table.values, table.rule, bounds);
}

PeriodCertificate detect_period_pass(const PassGrundyTable& table,
                                     std::optional<DetectBounds> bounds) {
  const DetectBounds b = bounds.value_or(default_bounds(table.rule));
  validate_bounds(b);
  const std::int64_t maxs = table.rule.max();
  require_length(table.limit(), b, maxs);
  for (std::int64_t q = 0; q <= b.max_preperiod; ++q) {
    for (std::int64_t p = 1; p <= b.max_period; ++p) {
      if (!window_matches(table.row1, q, p, maxs)) continue;
      // row1's recurrence consults row0[x]; the window match alone is not
      // sound unless row0 repeats with the same (q,p) or the pass term is
      // irrelevant throughout the window.
      if (window_matches(table.row0, q, p, maxs) ||
          pass_term_droppable(table, std::max(q + 1, maxs), q + 2 * p + maxs)) {
        return make_cert(q, p, maxs);
      }
    }
  }
  throw period_not_found_error("no pass-row period found for " + table.rule.to_string() +
                               " within q <= " + std::to_string(b.max_preperiod) +
                               ", p <= " + std::to_string(b.max_period));
}

std::int64_t window_mod(std::int64_t v, const PeriodCertificate& cert) {
  if (!cert.certified) throw std::invalid_argument("window_mod needs a certified period");
  const std::int64_t q = cert.preperiod;
  const std::int64_t p = cert.period;
  if (v >= q + 1) return v;
  const std::int64_t delta = (q + 1) - v;
  const std::int64_t k = (delta + p - 1) / p;  // least k with v + k*p >= q+1
  return v + k * p;
}

GrundyValue value_at(std::span<const GrundyValue> values, const PeriodCertificate& cert,
                     std::int64_t x) {
  if (!cert.certified) throw std::invalid_argument("value_at needs a certified period");
  if (x < 0) throw std::invalid_argument("pile size must be >= 0");
  const std::int64_t limit = static_cast<std::int64_t>(values.size()) - 1;
  if (x <= limit) return values[static_cast<std::size_t>(x)];
  const std::int64_t q = cert.preperiod;
  const std::int64_t p = cert.period;
  const std::int64_t rep = q + 1 + (x - (q + 1)) % p;
  if (rep > limit) {
    throw std::out_of_range("certificate window [" + std::to_string(q + 1) + ", " +
                            std::to_string(q + p) + "] exceeds the table");
  }
  return values[static_cast<std::size_t>(rep)];
}

GrundyValue value_at(const GrundyTable& table, const PeriodCertificate& cert, std::int64_t x) {
  return value_at(table.values, cert, x);
}

GrundyValue value_at_pass(const PassGrundyTable& table, const PeriodCertificate& cert,
                          std::int64_t x) {
  return value_at(table.row1, cert, x);
}

}  // namespace passnim
