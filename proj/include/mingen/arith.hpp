#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "mingen/error.hpp"

namespace mingen {

inline std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2)
    throw Error(ErrorKind::bad_params, "smallest_prime_divisor needs n >= 2");
  if (n % 2 == 0)
    return 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0)
      return q;
  return n;
}

inline bool is_prime(std::uint64_t n) {
  return n >= 2 && smallest_prime_divisor(n) == n;
}

// Saturating a^b; returns max() on overflow.
inline std::uint64_t checked_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > std::numeric_limits<std::uint64_t>::max() / a)
      return std::numeric_limits<std::uint64_t>::max();
    r *= a;
  }
  return r;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  auto r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

// ceil(n^((1/4) log_p n + 1)), saturated. This is the per-level budget for
// lifting through one minimal normal subgroup of a group of order n.
inline std::uint64_t quarter_exponent_bound(std::uint64_t n) {
  if (n < 2)
    return 1;
  auto p = static_cast<long double>(smallest_prime_divisor(n));
  long double ln = std::log(static_cast<long double>(n));
  long double exponent = 0.25L * (ln / std::log(p)) + 1.0L;
  long double log_bound = exponent * ln;
  if (log_bound >= 63.0L * std::log(2.0L))
    return std::numeric_limits<std::uint64_t>::max();
  // values within rounding error of an integer are that integer (n = p^k gives exact powers)
  const long double v = std::exp(log_bound);
  const long double r = std::nearbyint(v);
  if (std::fabs(v - r) <= v * 1e-12L)
    return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(v));
}

}  // namespace mingen
