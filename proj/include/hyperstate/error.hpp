#pragma once

#include <stdexcept>
#include <string>

namespace hyperstate {

// Bad user input: malformed text, out-of-range indices, mismatched dimensions.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused because it would exceed a size guard
// (state dimension, dense matrix size, enumeration count).
class guard_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

[[noreturn]] inline void fail_input(const std::string& what) {
  throw input_error(what);
}
[[noreturn]] inline void fail_guard(const std::string& what) {
  throw guard_error(what);
}

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace detail
}  // namespace hyperstate
