#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace menon {

using i128 = __int128;

// All arithmetic on norms, divisor sums and cyclotomic coefficients is meant to
// be exact.  These helpers throw on 64-bit overflow instead of wrapping, so a
// result that comes back is always the true integer value.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

// base^exp for exp >= 0, with 0^0 = 1.
inline long long checked_pow(long long base, long long exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  long long acc = 1;
  long long b = base;
  while (exp > 0) {
    if (exp & 1) acc = checked_mul(acc, b);
    exp >>= 1;
    if (exp > 0) b = checked_mul(b, b);
  }
  return acc;
}

inline long long checked_cast(i128 v) {
  if (v > (i128)std::numeric_limits<long long>::max() ||
      v < (i128)std::numeric_limits<long long>::min())
    throw std::overflow_error("64-bit overflow in narrowing");
  return (long long)v;
}

// v mod m in [0, m) for m > 0, independent of the sign of v.
inline long long floor_mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

inline long long floor_mod128(i128 v, long long m) {
  i128 r = v % (i128)m;
  if (r < 0) r += m;
  return (long long)r;
}

inline long long abs_ll(long long v) { return v < 0 ? -v : v; }

inline long long gcd_ll(long long a, long long b) {
  a = abs_ll(a);
  b = abs_ll(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd_ll(a, b), b);
}

// g = gcd(a,b) >= 0 together with x, y such that a*x + b*y = g.
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  long long old_r = a, r = b;
  long long old_x = 1, cur_x = 0;
  long long old_y = 0, cur_y = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
    t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

inline long long mul_mod(long long a, long long b, long long m) {
  return (long long)((i128)a * b % m);
}

inline long long pow_mod(long long base, long long exp, long long m) {
  base = floor_mod(base, m);
  long long acc = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

} // namespace menon
