#pragma once

#include <vector>

#include "menon/field.hpp"

namespace menon {

// Integral ideal of the ring of integers.
//
// Quadratic fields: a nonzero ideal is kept in Hermite normal form over the
// basis {1, omega}, as the Z-module  Z*a + Z*(b + c*omega)  with
//     a > 0,  c > 0,  c | a,  c | b,  0 <= b < a,
// closed under multiplication by omega.  The triple is canonical, so
// structural equality is ideal equality and the norm is a*c.
//
// The rational field degenerates to a single nonnegative integer n (the ideal
// <n>), with n = 0 the zero ideal.  The zero ideal is a first-class value for
// either kind: gcd(<0>, I) = I is meaningful and used by the enumerations.
struct Ideal {
  FieldDesc field;
  bool zero = true;
  long long n = 0;           // rational kind
  long long a = 0, b = 0, c = 0; // quadratic kind, valid when !zero

  bool is_zero() const { return zero; }
  bool is_unit_ideal() const;
  bool operator==(const Ideal&) const = default;
};

Ideal zero_ideal(const FieldDesc& K);
Ideal unit_ideal(const FieldDesc& K);

// <n> for a rational integer n (any sign; the ideal of |n|).
Ideal ideal_from_rational(const FieldDesc& K, long long n);

// Quadratic HNF constructor; validates all canonicality constraints and the
// closure of the lattice under multiplication by omega.
Ideal ideal_from_hnf(const FieldDesc& K, long long a, long long b, long long c);

// Smallest ideal containing every generator: the HNF of the Z-span of the
// generators together with their omega-multiples.
Ideal ideal_from_generators(const FieldDesc& K, const std::vector<Element>& gens);

Ideal principal_ideal(const FieldDesc& K, Element e);

long long ideal_norm(const Ideal& I);
bool ideal_contains(const Ideal& I, Element e);

// J | I, i.e. I is contained in J.  The zero ideal is divisible by everything.
bool ideal_divides(const Ideal& J, const Ideal& I);

Ideal ideal_gcd(const Ideal& I, const Ideal& J);
Ideal ideal_mul(const Ideal& I, const Ideal& J);
Ideal ideal_pow(const Ideal& I, int e);

// Exact quotient Q with Q*J = I; throws DomainError unless J | I.
Ideal ideal_div_exact(const Ideal& I, const Ideal& J);

// Total order by (norm, a, b, c) / (n), used for canonical sorting.
bool ideal_less(const Ideal& I, const Ideal& J);

enum class SplitType { split, inert, ramified, rational_prime };

struct PrimeSplit {
  SplitType type = SplitType::rational_prime;
  std::vector<Ideal> primes; // sorted; two for split, one otherwise
};

// Behaviour of the rational prime p in the field: decided by the Kronecker
// symbol (disc/p) and realized by the roots of x^2 - tx - s mod p.
PrimeSplit split_prime(const FieldDesc& K, long long p);

// (d/p) for prime p: 0 when p | d, else +-1 (Euler's criterion for odd p,
// the mod-8 rule for p = 2).
int kronecker_symbol(long long d, long long p);

struct IdealFactor {
  Ideal prime;
  int exponent = 0;
  bool operator==(const IdealFactor&) const = default;
};
using IdealFactorization = std::vector<IdealFactor>;

// Prime ideal factorization, sorted by (norm, HNF); empty for the unit ideal.
IdealFactorization factor_ideal(const Ideal& I);

Ideal reassemble(const FieldDesc& K, const IdealFactorization& f);

// Largest v with P^v | I.
int ideal_valuation(const Ideal& I, const Ideal& P);

// All divisors of I, sorted by (norm, HNF); starts with the unit ideal.
std::vector<Ideal> divisors_of(const Ideal& I);

// Every nonzero ideal with norm <= max_norm, sorted by (norm, HNF).
// include_unit controls whether <1> is part of the list.
std::vector<Ideal> ideals_up_to_norm(const FieldDesc& K, long long max_norm, bool include_unit);

} // namespace menon
