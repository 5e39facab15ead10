#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "passnim/grundy.hpp"

namespace passnim {

struct Violation {
  std::int64_t x = 0;
  int expected = 0;  // what the property predicts at x
  int actual = 0;    // what the table holds
  bool operator==(const Violation&) const = default;
};

/// Uniform pass/fail record: the effective range checked and every
/// violating position, not just the first.
struct CheckReport {
  std::string property_name;
  SubtractionSet rule;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<Violation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// G(x) == mex over successors by addition, for every x in [lo, hi].
/// Needs max(rule) headroom beyond hi in the table.
CheckReport check_reverse_mex(std::span<const GrundyValue> values, const SubtractionSet& rule,
                              std::int64_t lo, std::int64_t hi);
CheckReport check_reverse_mex(const GrundyTable& table, std::int64_t lo, std::int64_t hi);
CheckReport check_reverse_mex_pass(const PassGrundyTable& table, std::int64_t lo, std::int64_t hi);

/// row1[x] == mex over the subtraction options alone, i.e. dropping the
/// pass term does not change the mex. Requires lo >= max(rule).
CheckReport check_pass_independence(const PassGrundyTable& table, std::int64_t lo, std::int64_t hi);

/// Largest x in [max(rule), hi] where the pass term is still needed.
std::optional<std::int64_t> last_independence_violation(const PassGrundyTable& table,
                                                        std::int64_t hi);

/// Least x0 such that independence holds on all of [x0, hi]; never reported
/// below max(rule). Measured, not asserted minimal.
std::int64_t empirical_independence_threshold(const PassGrundyTable& table, std::int64_t hi);

/// row1 against the prefix blocks on [0, 12n+8] and the loop blocks on
/// [12n+9, 20n+8], element-wise.
CheckReport verify_block_theorem(std::int64_t n, const PassGrundyTable& table);

/// DP values against grundy_closed over [0, periods*8n].
CheckReport verify_closed_form_theorem(std::int64_t n, const GrundyTable& table,
                                       std::int64_t periods);

}  // namespace passnim
