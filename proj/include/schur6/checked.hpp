#pragma once

#include <cstdint>
#include <stdexcept>

namespace schur6 {

using i64 = std::int64_t;

// Exact 64-bit arithmetic: any overflow throws instead of wrapping.
// Every computation in this project stays far below the 64-bit range,
// so a throw here always means a logic error worth aborting on.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("checked_add: int64 overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("checked_sub: int64 overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("checked_mul: int64 overflow");
  return r;
}

// Internal invariant check, active in all build types.
inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace schur6
