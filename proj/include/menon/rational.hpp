#pragma once

#include "menon/checked.hpp"
#include "menon/errors.hpp"

namespace menon {

// Exact rational scratch value, normalized to den > 0 and gcd(|num|, den) = 1.
// Only used where a formula passes through a genuinely rational intermediate;
// final results are asserted integral before leaving the module.
struct Rat {
  long long num = 0;
  long long den = 1;

  static Rat of(long long n, long long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = gcd_ll(n, d);
    if (g > 1) { n /= g; d /= g; }
    return Rat{n, d};
  }

  static Rat whole(long long n) { return Rat{n, 1}; }

  Rat operator+(const Rat& o) const {
    return of(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
              checked_mul(den, o.den));
  }

  Rat operator*(const Rat& o) const {
    return of(checked_mul(num, o.num), checked_mul(den, o.den));
  }

  bool is_integer() const { return den == 1; }

  long long as_integer(const char* what) const {
    if (den != 1) throw InvariantError(std::string("expected an integer value in ") + what);
    return num;
  }

  bool operator==(const Rat&) const = default;
};

} // namespace menon
