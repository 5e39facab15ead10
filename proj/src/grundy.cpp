#include "passnim/grundy.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "passnim/errors.hpp"

namespace passnim {

namespace {

// Option sets here never exceed |rule|+1 elements, so mex values fit in a
// 64-bit mask as long as the rule is small; the vector path covers the rest.
int mex_general(std::span<const GrundyValue> values) {
  const std::size_t n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (GrundyValue v : values) {
    if (v <= n) seen[v] = true;
  }
  std::size_t i = 0;
  while (seen[i]) ++i;
  return static_cast<int>(i);
}

void check_limit(std::int64_t limit, std::int64_t entry_budget) {
  if (limit < 0) throw std::invalid_argument("table limit must be >= 0");
  if (entry_budget < 1) throw std::invalid_argument("entry budget must be >= 1");
  if (limit + 1 > entry_budget) {
    throw capacity_error("table of " + std::to_string(limit + 1) + " entries exceeds budget of " +
                         std::to_string(entry_budget));
  }
}

void fill_plain_row(std::vector<GrundyValue>& out, const SubtractionSet& rule) {
  const auto& s = rule.amounts();
  const std::int64_t count = static_cast<std::int64_t>(out.size());
  if (s.size() <= 62) {
    for (std::int64_t x = 0; x < count; ++x) {
      std::uint64_t mask = 0;
      for (std::int64_t a : s) {
        if (a > x) break;
        mask |= std::uint64_t{1} << out[x - a];
      }
      out[x] = static_cast<GrundyValue>(std::countr_one(mask));
    }
    return;
  }
  std::vector<GrundyValue> options;
  options.reserve(s.size());
  for (std::int64_t x = 0; x < count; ++x) {
    options.clear();
    for (std::int64_t a : s) {
      if (a > x) break;
      options.push_back(out[x - a]);
    }
    out[x] = static_cast<GrundyValue>(mex_general(options));
  }
}

}  // namespace

int mex(std::span<const GrundyValue> values) {
  if (values.size() < 64) {
    std::uint64_t mask = 0;
    for (GrundyValue v : values) {
      if (v < 64) mask |= std::uint64_t{1} << v;
    }
    return std::countr_one(mask);
  }
  return mex_general(values);
}

int mex(std::initializer_list<int> values) {
  std::vector<GrundyValue> copy;
  copy.reserve(values.size());
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("mex inputs must be >= 0");
    // anything past the storage range can never be a small mex anyway
    copy.push_back(static_cast<GrundyValue>(std::min(v, 0xFFFF)));
  }
  return mex(std::span<const GrundyValue>(copy));
}

std::vector<std::int64_t> moves(std::int64_t x, const SubtractionSet& rule) {
  if (x < 0) throw std::invalid_argument("pile size must be >= 0");
  std::vector<std::int64_t> out;
  const auto& s = rule.amounts();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it <= x) out.push_back(x - *it);
  }
  return out;  // rule descending -> successors ascending
}

GrundyTable grundy_table(const SubtractionSet& rule, std::int64_t limit,
                         std::int64_t entry_budget) {
  check_limit(limit, entry_budget);
  std::vector<GrundyValue> values(static_cast<std::size_t>(limit + 1));
  fill_plain_row(values, rule);
  return GrundyTable{rule, std::move(values)};
}

PassGrundyTable pass_grundy_table(const SubtractionSet& rule, std::int64_t limit,
                                  std::int64_t entry_budget) {
  check_limit(limit, entry_budget);
  std::vector<GrundyValue> row0(static_cast<std::size_t>(limit + 1));
  fill_plain_row(row0, rule);

  std::vector<GrundyValue> row1(static_cast<std::size_t>(limit + 1));
  const auto& s = rule.amounts();
  if (s.size() <= 61) {
    for (std::int64_t x = 0; x <= limit; ++x) {
      std::uint64_t mask = 0;
      for (std::int64_t a : s) {
        if (a > x) break;
        mask |= std::uint64_t{1} << row1[x - a];
      }
      if (x >= 1) mask |= std::uint64_t{1} << row0[x];  // the pass option
      row1[x] = static_cast<GrundyValue>(std::countr_one(mask));
    }
  } else {
    std::vector<GrundyValue> options;
    options.reserve(s.size() + 1);
    for (std::int64_t x = 0; x <= limit; ++x) {
      options.clear();
      for (std::int64_t a : s) {
        if (a > x) break;
        options.push_back(row1[x - a]);
      }
      if (x >= 1) options.push_back(row0[x]);
      row1[x] = static_cast<GrundyValue>(mex_general(options));
    }
  }
  return PassGrundyTable{rule, std::move(row0), std::move(row1)};
}

namespace {

void check_index(std::int64_t x, std::int64_t limit) {
  if (x < 0 || x > limit) {
    throw std::out_of_range("position " + std::to_string(x) + " outside table limit " +
                            std::to_string(limit));
  }
}

}  // namespace

Outcome outcome_by_grundy(const GrundyTable& table, std::int64_t x) {
  check_index(x, table.limit());
  return table.values[static_cast<std::size_t>(x)] == 0 ? Outcome::P : Outcome::N;
}

Outcome outcome_by_grundy(const PassGrundyTable& table, std::int64_t x, bool pass_available) {
  check_index(x, table.limit());
  const auto& row = pass_available ? table.row1 : table.row0;
  return row[static_cast<std::size_t>(x)] == 0 ? Outcome::P : Outcome::N;
}

Outcome outcome_by_search(const SubtractionSet& rule, std::int64_t x, bool pass_available) {
  if (x < 0) throw std::invalid_argument("pile size must be >= 0");
  const auto& s = rule.amounts();
  std::vector<char> win0(static_cast<std::size_t>(x + 1), 0);
  for (std::int64_t y = 0; y <= x; ++y) {
    for (std::int64_t a : s) {
      if (a > y) break;
      if (!win0[y - a]) {
        win0[y] = 1;
        break;
      }
    }
  }
  if (!pass_available) return win0[x] ? Outcome::N : Outcome::P;

  std::vector<char> win1(static_cast<std::size_t>(x + 1), 0);
  for (std::int64_t y = 0; y <= x; ++y) {
    bool winning = false;
    for (std::int64_t a : s) {
      if (a > y) break;
      if (!win1[y - a]) {
        winning = true;
        break;
      }
    }
    if (!winning && y >= 1 && !win0[y]) winning = true;  // pass into the no-pass game
    win1[y] = winning;
  }
  return win1[x] ? Outcome::N : Outcome::P;
}

std::vector<Move> winning_moves(const GrundyTable& table, std::int64_t x) {
  check_index(x, table.limit());
  std::vector<Move> out;
  for (std::int64_t a : table.rule.amounts()) {
    if (a > x) break;
    if (table.values[x - a] == 0) out.push_back(Move::remove(a));
  }
  return out;
}

std::vector<Move> winning_moves(const PassGrundyTable& table, std::int64_t x,
                                bool pass_available) {
  check_index(x, table.limit());
  std::vector<Move> out;
  const auto& row = pass_available ? table.row1 : table.row0;
  for (std::int64_t a : table.rule.amounts()) {
    if (a > x) break;
    if (row[x - a] == 0) out.push_back(Move::remove(a));
  }
  if (pass_available && x >= 1 && table.row0[x] == 0) out.push_back(Move::pass());
  return out;
}

}  // namespace passnim
