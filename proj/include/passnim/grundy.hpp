#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "passnim/subtraction_set.hpp"

namespace passnim {

using GrundyValue = std::uint16_t;

/// Default cap on entries per table row (64 Mi values).
inline constexpr std::int64_t kDefaultEntryBudget = std::int64_t{1} << 26;

/// Least nonnegative integer absent from the input. Duplicates are fine;
/// the empty collection yields 0.
int mex(std::span<const GrundyValue> values);
int mex(std::initializer_list<int> values);

/// Positions reachable from x in one removal, sorted ascending.
std::vector<std::int64_t> moves(std::int64_t x, const SubtractionSet& rule);

struct GrundyTable {
  SubtractionSet rule;
  std::vector<GrundyValue> values;  // index = pile size, 0..limit
  std::int64_t limit() const noexcept { return std::int64_t(values.size()) - 1; }
};

/// Pass variant. row0 holds the values of (x,0), identical to the plain
/// game; row1 holds the values of (x,1) where the one-time pass is still
/// available. The pass option from (x,1) exists for x >= 1 only.
struct PassGrundyTable {
  SubtractionSet rule;
  std::vector<GrundyValue> row0;
  std::vector<GrundyValue> row1;
  std::int64_t limit() const noexcept { return std::int64_t(row0.size()) - 1; }
};

GrundyTable grundy_table(const SubtractionSet& rule, std::int64_t limit,
                         std::int64_t entry_budget = kDefaultEntryBudget);
PassGrundyTable pass_grundy_table(const SubtractionSet& rule, std::int64_t limit,
                                  std::int64_t entry_budget = kDefaultEntryBudget);

enum class Outcome { P, N };

Outcome outcome_by_grundy(const GrundyTable& table, std::int64_t x);
Outcome outcome_by_grundy(const PassGrundyTable& table, std::int64_t x, bool pass_available);

/// Win/loss classification by plain backward induction. No Grundy values
/// are computed; this is the independent oracle for the tables above.
Outcome outcome_by_search(const SubtractionSet& rule, std::int64_t x, bool pass_available);

struct Move {
  std::int64_t amount = 0;  // stones removed; 0 when is_pass
  bool is_pass = false;

  static Move remove(std::int64_t k) { return {k, false}; }
  static Move pass() { return {0, true}; }
  bool operator==(const Move&) const = default;
};

/// Moves whose successor has Grundy value 0: removals ascending, the pass
/// move (when available and winning) last. Empty exactly at P-positions.
std::vector<Move> winning_moves(const GrundyTable& table, std::int64_t x);
std::vector<Move> winning_moves(const PassGrundyTable& table, std::int64_t x, bool pass_available);

}  // namespace passnim
