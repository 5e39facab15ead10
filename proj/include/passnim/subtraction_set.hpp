#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace passnim {

/// A finite set of legal removal amounts, kept sorted ascending.
/// Invariants: nonempty, strictly increasing, every amount >= 1.
class SubtractionSet {
 public:
  /// Unset placeholder, only useful as a to-be-assigned field.
  SubtractionSet() = default;
  explicit SubtractionSet(std::vector<std::int64_t> amounts);
  SubtractionSet(std::initializer_list<std::int64_t> amounts);

  const std::vector<std::int64_t>& amounts() const noexcept { return amounts_; }
  std::size_t size() const noexcept { return amounts_.size(); }
  std::int64_t min() const noexcept { return amounts_.front(); }
  std::int64_t max() const noexcept { return amounts_.back(); }

  bool operator==(const SubtractionSet&) const = default;

  std::string to_string() const;  // "{2,12,14}"

 private:
  std::vector<std::int64_t> amounts_;
};

/// Parses a comma-separated amount list such as "2,12,14".
SubtractionSet parse_set(std::string_view text);

}  // namespace passnim
