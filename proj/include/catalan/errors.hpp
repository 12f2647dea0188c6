#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

struct invalid_cartan_type : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A size guard tripped; the message names the guard and its value.
struct work_limit_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Consistency condition that must never fail on valid input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace catalan
