#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "passnim/grundy.hpp"

namespace passnim {

struct PeriodCertificate {
  std::int64_t preperiod = 0;  // q: values repeat from x = q+1 on
  std::int64_t period = 0;     // p
  std::int64_t window_lo = 0;  // index range consulted during certification
  std::int64_t window_hi = -1;
  bool certified = false;
};

struct DetectBounds {
  std::int64_t max_preperiod = 0;
  std::int64_t max_period = 0;
};

/// 4*max(rule)^2 and 2*max(rule)^2.
DetectBounds default_bounds(const SubtractionSet& rule);

/// Lexicographically least certified (q, p), searching q ascending then p
/// ascending. A match over the window [q+1, q+p+max(rule)] pins the
/// sequence forever, since each value is a function of the previous
/// max(rule) entries. Requires values up to max_preperiod + 2*max_period
/// + max(rule); throws period_not_found_error when nothing certifies.
PeriodCertificate detect_period(std::span<const GrundyValue> values, const SubtractionSet& rule,
                                std::optional<DetectBounds> bounds = {});
PeriodCertificate detect_period(const GrundyTable& table, std::optional<DetectBounds> bounds = {});

/// Certificate for row1. Because row1[x] consults row0[x] through the pass
/// option, a (q,p) is certified only when row0 matches over the same window
/// too, or the pass term provably never changes the mex there.
PeriodCertificate detect_period_pass(const PassGrundyTable& table,
                                     std::optional<DetectBounds> bounds = {});

/// Lifts v into the representative window [q+1, q+p] by adding multiples of
/// p when v <= q; values already >= q+1 pass through unchanged.
std::int64_t window_mod(std::int64_t v, const PeriodCertificate& cert);

/// Table lookup extended to arbitrary x >= 0 through the certificate.
GrundyValue value_at(std::span<const GrundyValue> values, const PeriodCertificate& cert,
                     std::int64_t x);
GrundyValue value_at(const GrundyTable& table, const PeriodCertificate& cert, std::int64_t x);
/// row1 lookup.
GrundyValue value_at_pass(const PassGrundyTable& table, const PeriodCertificate& cert,
                          std::int64_t x);

}  // namespace passnim
