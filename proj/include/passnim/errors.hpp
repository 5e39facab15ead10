#pragma once

#include <stdexcept>

namespace passnim {

// Requested table would exceed the configured entry budget.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// No (preperiod, period) pair certified within the search bounds.
class period_not_found_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace passnim
