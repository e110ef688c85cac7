#include "doctest.h"
#include "menon/arith.hpp"
#include "menon/residue_ring.hpp"

using namespace menon;

namespace {

// direct count of unit pairs with unit sum, straight off the residue ring
long long brute_phi_pairs(const FieldDesc& K, const Ideal& I) {
  RingPtr ring = make_ring(K, I);
  long long count = 0;
  for (long long p1 = 0; p1 < ring->phi; ++p1)
    for (long long p2 = 0; p2 < ring->phi; ++p2) {
      long long sum = ring->add_index(ring->unit_list[(size_t)p1],
                                      ring->unit_list[(size_t)p2]);
      if (ring->is_unit_index(sum)) ++count;
    }
  return count;
}

} // namespace

TEST_CASE("moebius function on ideals") {
  FieldDesc Q = make_rational_field();
  FieldDesc Qi = make_quadratic_field(-1);
  CHECK(mobius(unit_ideal(Q)) == 1);
  CHECK(mobius(unit_ideal(Qi)) == 1);
  CHECK(mobius(ideal_from_rational(Qi, 2)) == 0);  // <1+i>^2
  CHECK(mobius(ideal_from_rational(Qi, 5)) == 1);  // two split primes
  CHECK(mobius(ideal_from_rational(Qi, 3)) == -1); // inert
  CHECK(mobius(principal_ideal(Qi, Element{1, 1})) == -1);
  CHECK(mobius(ideal_from_rational(Q, 12)) == 0);
  CHECK(mobius(ideal_from_rational(Q, 30)) == -1);
  CHECK(mobius(ideal_from_rational(Q, 35)) == 1);
}

TEST_CASE("totient on ideals") {
  FieldDesc Q = make_rational_field();
  FieldDesc Qi = make_quadratic_field(-1);
  CHECK(euler_phi(unit_ideal(Q)) == 1);
  CHECK(euler_phi(ideal_from_rational(Qi, 2)) == 2);
  CHECK(euler_phi(ideal_from_rational(Qi, 3)) == 8);
  CHECK(euler_phi(ideal_from_rational(Q, 12)) == 4);
  CHECK(euler_phi(principal_ideal(Qi, Element{2, 1})) == 4);
}

TEST_CASE("divisor power sums") {
  FieldDesc Q = make_rational_field();
  FieldDesc Qi = make_quadratic_field(-1);
  Ideal two = ideal_from_rational(Qi, 2);
  CHECK(sigma_power(two, 0) == 3); // unit, <1+i>, <2>
  CHECK(sigma_power(two, 1) == 7); // 1 + 2 + 4
  CHECK(sigma_power(ideal_from_rational(Q, 6), 1) == 12);
  CHECK(sigma_power(ideal_from_rational(Q, 6), 0) == 4);
  CHECK(sigma_power(unit_ideal(Q), 5) == 1);
}

TEST_CASE("unit pairs with unit sum: pinned values and brute force") {
  FieldDesc Q = make_rational_field();
  FieldDesc Qi = make_quadratic_field(-1);
  CHECK(phi_pairs(ideal_from_rational(Q, 5)) == 12);
  CHECK(phi_pairs(ideal_from_rational(Qi, 2)) == 0); // N(p) = 2 kills every pair
  CHECK(phi_pairs(ideal_from_rational(Qi, 3)) == 56);
  CHECK(phi_pairs(unit_ideal(Q)) == 1);

  for (long long n = 1; n <= 40; ++n) {
    Ideal I = ideal_from_rational(Q, n);
    CHECK(phi_pairs(I) == brute_phi_pairs(Q, I));
  }
  for (long long D : {-1LL, 5LL}) {
    FieldDesc K = make_quadratic_field(D);
    for (const Ideal& I : ideals_up_to_norm(K, 60, /*include_unit=*/true))
      CHECK(phi_pairs(I) == brute_phi_pairs(K, I));
  }
}

TEST_CASE("unit-pair count at prime powers matches the product formula") {
  for (long long D : {-1LL, -3LL, 2LL, 5LL}) {
    FieldDesc K = make_quadratic_field(D);
    for (const Ideal& I : ideals_up_to_norm(K, 200, /*include_unit=*/false)) {
      IdealFactorization f = factor_ideal(I);
      if (f.size() != 1) continue;
      long long N = ideal_norm(f[0].prime);
      int e = f[0].exponent;
      long long expect = (N - 1) * (N - 2);
      for (int j = 0; j < 2 * e - 2; ++j) expect *= N;
      CHECK(phi_pairs(I) == expect);
    }
  }
}

TEST_CASE("multiplicativity on coprime pairs") {
  for (long long D : {-1LL, 5LL}) {
    FieldDesc K = make_quadratic_field(D);
    std::vector<Ideal> pool = ideals_up_to_norm(K, 20, /*include_unit=*/false);
    for (const Ideal& I : pool)
      for (const Ideal& J : pool) {
        if (!ideal_gcd(I, J).is_unit_ideal()) continue;
        if (ideal_norm(I) * ideal_norm(J) > 400) continue;
        Ideal IJ = ideal_mul(I, J);
        CHECK(mobius(IJ) == mobius(I) * mobius(J));
        CHECK(euler_phi(IJ) == euler_phi(I) * euler_phi(J));
        CHECK(phi_pairs(IJ) == phi_pairs(I) * phi_pairs(J));
        for (long long s = 0; s <= 2; ++s)
          CHECK(sigma_power(IJ, s) == sigma_power(I, s) * sigma_power(J, s));
      }
  }
}

TEST_CASE("conductor-supported part of a modulus") {
  FieldDesc Q = make_rational_field();
  Ideal a = ideal_from_rational(Q, 12);
  CHECK(compute_a0(a, ideal_from_rational(Q, 2)) == ideal_from_rational(Q, 4));
  CHECK(compute_a0(a, ideal_from_rational(Q, 6)) == ideal_from_rational(Q, 12));
  CHECK(compute_a0(a, unit_ideal(Q)) == unit_ideal(Q));

  FieldDesc Qi = make_quadratic_field(-1);
  Ideal P = principal_ideal(Qi, Element{2, 1});
  Ideal mod = ideal_mul(ideal_from_rational(Qi, 2), P);
  CHECK(compute_a0(mod, P) == P);

  // d must divide a
  CHECK_THROWS_AS(compute_a0(ideal_from_rational(Q, 12), ideal_from_rational(Q, 5)),
                  DomainError);

  // postconditions across a sweep: a0 | a, supported exactly on d's primes,
  // and a/a0 coprime to d
  for (long long n = 2; n <= 60; ++n) {
    Ideal I = ideal_from_rational(Q, n);
    for (const Ideal& d : divisors_of(I)) {
      Ideal a0 = compute_a0(I, d);
      CHECK(ideal_divides(a0, I));
      CHECK(ideal_gcd(ideal_div_exact(I, a0), d).is_unit_ideal());
      for (const IdealFactor& pf : factor_ideal(a0))
        CHECK(ideal_valuation(d, pf.prime) > 0);
    }
  }
}
