#include "menon/arith.hpp"

#include "menon/errors.hpp"
#include "menon/rational.hpp"

namespace menon {

long long mobius(const Ideal& I) {
  IdealFactorization f = factor_ideal(I);
  long long sign = 1;
  for (const IdealFactor& pf : f) {
    if (pf.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long long euler_phi(const Ideal& I) {
  long long out = 1;
  for (const IdealFactor& pf : factor_ideal(I)) {
    long long np = ideal_norm(pf.prime);
    long long q = checked_pow(np, pf.exponent - 1);
    out = checked_mul(out, checked_sub(checked_mul(q, np), q));
  }
  return out;
}

long long sigma_power(const Ideal& I, long long s) {
  if (s < 0) throw DomainError("sigma_power: negative exponent");
  long long out = 1;
  for (const IdealFactor& pf : factor_ideal(I)) {
    long long nps = checked_pow(ideal_norm(pf.prime), s);
    long long term = 1;
    long long acc = 1;
    for (int j = 1; j <= pf.exponent; ++j) {
      acc = checked_mul(acc, nps);
      term = checked_add(term, acc);
    }
    out = checked_mul(out, term);
  }
  return out;
}

long long phi_pairs(const Ideal& I) {
  if (I.is_unit_ideal()) return 1;
  long long phi = euler_phi(I);
  Rat sum = Rat::whole(0);
  for (const Ideal& d : divisors_of(I)) {
    long long mu = mobius(d);
    if (mu == 0) continue;
    sum = sum + Rat::of(mu, euler_phi(d));
  }
  Rat total = Rat::of(checked_mul(phi, phi), 1) * sum;
  return total.as_integer("phi_pairs");
}

Ideal compute_a0(const Ideal& a, const Ideal& d) {
  if (!ideal_divides(d, a)) throw DomainError("compute_a0: d must divide a");
  Ideal a0 = unit_ideal(a.field);
  for (const IdealFactor& pf : factor_ideal(d)) {
    int v = ideal_valuation(a, pf.prime);
    if (v < pf.exponent) throw InvariantError("compute_a0: valuation below divisor's");
    a0 = ideal_mul(a0, ideal_pow(pf.prime, v));
  }
  if (!ideal_divides(a0, a)) throw InvariantError("compute_a0: a0 fails to divide a");
  Ideal rest = ideal_div_exact(a, a0);
  if (!ideal_gcd(a0, rest).is_unit_ideal())
    throw InvariantError("compute_a0: split is not coprime");
  return a0;
}

} // namespace menon
