#include "passnim/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace passnim {

namespace {

void require_n(std::int64_t n) {
  if (n < 3) {
    throw std::invalid_argument("the closed forms require n >= 3, got n = " + std::to_string(n));
  }
}

const std::vector<GrundyValue> kA = {0, 1, 2, 0};
const std::vector<GrundyValue> kB = {1, 1, 0, 0};
const std::vector<GrundyValue> kC = {1, 3, 4, 2};
const std::vector<GrundyValue> kD = {0, 3, 2, 2};
const std::vector<GrundyValue> kE = {3, 3, 2, 2};
const std::vector<GrundyValue> kF = {3, 1, 0, 0, 1, 1, 3, 0};
const std::vector<GrundyValue> kG = {1, 3, 2, 2, 3, 3, 0, 2, 4};
const std::vector<GrundyValue> kP = {3, 2, 2, 3};
const std::vector<GrundyValue> kQ = {1, 0, 0, 1};
const std::vector<GrundyValue> kR = {1, 2, 0, 1};
const std::vector<GrundyValue> kS = {3, 0, 2, 3};

}  // namespace

SubtractionSet closed_form_rule(std::int64_t n) {
  require_n(n);
  return SubtractionSet{2, 4 * n, 4 * n + 2};
}

int grundy_closed(std::int64_t n, std::int64_t x) {
  require_n(n);
  if (x < 0) throw std::invalid_argument("pile size must be >= 0");
  const std::int64_t r = x % (8 * n);
  if (r < 4 * n) return r % 4 < 2 ? 0 : 1;
  return (r - 4 * n) % 4 < 2 ? 2 : 3;
}

std::int64_t BlockPattern::expanded_length(std::int64_t n) const {
  std::int64_t total = 0;
  for (const BlockSegment& seg : segments) {
    const std::int64_t reps = seg.repeats(n);
    if (reps < 0) {
      throw std::invalid_argument("segment " + seg.name + " would repeat " +
                                  std::to_string(reps) + " times");
    }
    total += reps * static_cast<std::int64_t>(seg.values.size());
  }
  return total;
}

std::vector<GrundyValue> BlockPattern::expand(std::int64_t n) const {
  std::vector<GrundyValue> out;
  out.reserve(static_cast<std::size_t>(expanded_length(n)));
  for (const BlockSegment& seg : segments) {
    for (std::int64_t r = 0; r < seg.repeats(n); ++r) {
      out.insert(out.end(), seg.values.begin(), seg.values.end());
    }
  }
  return out;
}

BlockPattern pass_prefix_pattern() {
  return BlockPattern{{
      {"A", kA, 0, 1},
      {"B", kB, 1, -1},
      {"C", kC, 0, 1},
      {"D", kD, 0, 1},
      {"E", kE, 1, -2},
      {"F", kF, 0, 1},
      {"B", kB, 1, -2},
      {"G", kG, 0, 1},
  }};
}

BlockPattern pass_loop_pattern() {
  return BlockPattern{{
      {"P", kP, 1, -2},
      {"Q", kQ, 0, 1},
      {"R", kR, 0, 1},
      {"Q", kQ, 1, -2},
      {"P", kP, 0, 1},
      {"S", kS, 0, 1},
  }};
}

std::vector<GrundyValue> pass_prefix_values(std::int64_t n) {
  require_n(n);
  return pass_prefix_pattern().expand(n);  // length 12n+9, x = 0..12n+8
}

std::vector<GrundyValue> pass_loop_values(std::int64_t n) {
  require_n(n);
  return pass_loop_pattern().expand(n);  // length 8n, x = 12n+9..20n+8
}

int grundy_pass_closed(std::int64_t n, std::int64_t x) {
  require_n(n);
  if (x < 0) throw std::invalid_argument("pile size must be >= 0");
  if (x <= 12 * n + 8) {
    if (x <= 3) return kA[x];
    if (x <= 4 * n - 1) return kB[(x - 4) % 4];
    if (x <= 4 * n + 3) return kC[x - 4 * n];
    if (x <= 4 * n + 7) return kD[x - (4 * n + 4)];
    if (x <= 8 * n - 1) return kE[(x - (4 * n + 8)) % 4];
    if (x <= 8 * n + 7) return kF[x - 8 * n];
    if (x <= 12 * n - 1) return kB[(x - (8 * n + 8)) % 4];
    return kG[x - 12 * n];
  }
  std::int64_t r = (x - (12 * n + 9)) % (8 * n);
  if (r < 4 * (n - 2)) return kP[r % 4];
  r -= 4 * (n - 2);
  if (r < 4) return kQ[r];
  r -= 4;
  if (r < 4) return kR[r];
  r -= 4;
  if (r < 4 * (n - 2)) return kQ[r % 4];
  r -= 4 * (n - 2);
  if (r < 4) return kP[r];
  return kS[r - 4];
}

}  // namespace passnim
