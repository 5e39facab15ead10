#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "passnim/grundy.hpp"

namespace passnim {

/// {2, 4n, 4n+2}. The evaluators below are only valid for n >= 3, so this
/// constructor rejects smaller n; the DP runs fine on such sets regardless.
SubtractionSet closed_form_rule(std::int64_t n);

/// Four-case closed form for the plain game: writing x = 8n*k + r, the value
/// is 0/1 in the lower half (r < 4n) and 2/3 in the upper, switching on
/// r mod 4.
int grundy_closed(std::int64_t n, std::int64_t x);

struct BlockSegment {
  std::string name;
  std::vector<GrundyValue> values;
  // The segment repeats n_coeff*n + n_offset times.
  std::int64_t n_coeff = 0;
  std::int64_t n_offset = 1;
  std::int64_t repeats(std::int64_t n) const { return n_coeff * n + n_offset; }
};

/// A Grundy sequence written as named value blocks with n-dependent
/// repetition counts.
struct BlockPattern {
  std::vector<BlockSegment> segments;
  std::int64_t expanded_length(std::int64_t n) const;
  std::vector<GrundyValue> expand(std::int64_t n) const;
};

/// A B^{n-1} C D E^{n-2} F B^{n-2} G — row1 over x = 0..12n+8.
BlockPattern pass_prefix_pattern();
/// P^{n-2} Q R Q^{n-2} P S — row1 over x = 12n+9..20n+8, then repeating.
BlockPattern pass_loop_pattern();

std::vector<GrundyValue> pass_prefix_values(std::int64_t n);
std::vector<GrundyValue> pass_loop_values(std::int64_t n);

/// row1 value at any x: prefix below 12n+9, loop residue from there on.
int grundy_pass_closed(std::int64_t n, std::int64_t x);

}  // namespace passnim
