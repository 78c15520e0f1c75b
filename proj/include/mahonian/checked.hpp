#pragma once

#include <cstdint>

#include "mahonian/error.hpp"

namespace mahonian {

using Count = std::uint64_t;

// Overflow-checked arithmetic on Count. Throws Error{Overflow} instead of wrapping.
inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "addition exceeds 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "product exceeds 64 bits");
  return r;
}

// Ordinary binomial coefficient C(n, k), exact.
inline Count binomial(Count n, Count k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (Count i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(UINT64_MAX))
      throw Error(ErrorCode::Overflow, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<Count>(r);
}

}  // namespace mahonian
