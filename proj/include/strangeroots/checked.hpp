#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strangeroots {

using Int = std::int64_t;

// All core arithmetic funnels through these helpers so that an overflow
// aborts loudly (std::overflow_error) instead of wrapping. The search caps
// its range well inside the 64-bit safe zone, so a trap firing means a bug,
// not a recoverable condition.
namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

}  // namespace checked

// ceil(a/b) for a >= 0, b > 0, in exact integer arithmetic.
inline Int ceil_div(Int a, Int b) { return checked::add(a, b - 1) / b; }

}  // namespace strangeroots
