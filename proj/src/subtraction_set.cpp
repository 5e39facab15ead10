#include "passnim/subtraction_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace passnim {

namespace {

void validate(std::vector<std::int64_t>& amounts) {
  if (amounts.empty()) {
    throw std::invalid_argument("subtraction set must be nonempty");
  }
  std::sort(amounts.begin(), amounts.end());
  if (amounts.front() < 1) {
    throw std::invalid_argument("subtraction amounts must be >= 1");
  }
  if (std::adjacent_find(amounts.begin(), amounts.end()) != amounts.end()) {
    throw std::invalid_argument("subtraction amounts must be distinct");
  }
}

}  // namespace

SubtractionSet::SubtractionSet(std::vector<std::int64_t> amounts) : amounts_(std::move(amounts)) {
  validate(amounts_);
}

SubtractionSet::SubtractionSet(std::initializer_list<std::int64_t> amounts) : amounts_(amounts) {
  validate(amounts_);
}

std::string SubtractionSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < amounts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(amounts_[i]);
  }
  out += '}';
  return out;
}

SubtractionSet parse_set(std::string_view text) {
  std::vector<std::int64_t> amounts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad subtraction amount: '" + std::string(item) + "'");
    }
    amounts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SubtractionSet(std::move(amounts));
}

}  // namespace passnim
