#pragma once

#include "menon/ideal.hpp"

namespace menon {

// Moebius function of an ideal: (-1)^k on squarefree products of k primes,
// zero otherwise, 1 on the unit ideal.
long long mobius(const Ideal& I);

// Number of residues coprime to I, i.e. the unit count of the quotient ring:
// prod over prime powers p^e of N(p)^e - N(p)^{e-1}.
long long euler_phi(const Ideal& I);

// Divisor power sum: sum over ideal divisors d of I of N(d)^s (s >= 0).
long long sigma_power(const Ideal& I, long long s);

/*
 * Count of pairs (x, y) modulo I with x, y, and x + y all units.  This is
 * multiplicative with prime-power value
 *   N(p)^{2e-2} * (N(p) - 1) * (N(p) - 2),
 * computed here through the equivalent divisor-sum form
 *   phi(I)^2 * sum_{d | I} mu(d) / phi(d)
 * so the two shapes cross-check each other in tests.
 */
long long phi_pairs(const Ideal& I);

// The part of a supported by the primes dividing d: prod_{p | d} p^{v_p(a)}.
// Requires d | a.
Ideal compute_a0(const Ideal& a, const Ideal& d);

} // namespace menon
