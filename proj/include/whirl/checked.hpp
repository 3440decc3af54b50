#pragma once

#include <cstdint>
#include <string>

#include "whirl/error.hpp"

namespace whirl::checked {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

// 3^e; exponents above 39 do not fit a signed 64-bit integer.
inline constexpr int kMaxExponent = 39;

inline std::int64_t pow3(int e) {
  if (e < 0 || e > kMaxExponent) throw OverflowError("3^" + std::to_string(e) + " out of 64-bit range");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

}  // namespace whirl::checked
