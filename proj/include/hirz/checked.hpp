#pragma once

#include <cstdint>
#include <stdexcept>

namespace hirz {

using Int = std::int64_t;

// Overflow-checked arithmetic. Every dimension in this library is exact, so
// silent wraparound would produce wrong certificates; throw instead.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// binomial(n, k) for n >= 0, 0 <= k; returns 0 for k > n.
inline Int binomial(Int n, Int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial with negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    __int128 t = static_cast<__int128>(r) * (n - k + i) / i;
    if (t > INT64_MAX) throw std::overflow_error("integer overflow in binomial");
    r = static_cast<Int>(t);
  }
  return r;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// True iff q = p^k for some prime p and k >= 1.
inline bool is_prime_power(Int q) {
  if (q < 2) return false;
  Int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace hirz
