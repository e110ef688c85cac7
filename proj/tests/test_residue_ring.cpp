#include <cstdlib>
#include <set>

#include "doctest.h"
#include "menon/arith.hpp"
#include "menon/residue_ring.hpp"

using namespace menon;

namespace {

// rebuild a unit from its dlog row using ring arithmetic
long long unit_from_dlog(const ResidueRing& ring, long long rep_index) {
  size_t k = ring.units.generators.size();
  long long acc = ring.one_index;
  for (size_t j = 0; j < k; ++j) {
    long long g = ring.reduce_index(ring.units.generators[j]);
    long long e = ring.units.dlog[(size_t)rep_index * k + j];
    acc = ring.mul_index(acc, ring.pow_index(g, e));
  }
  return acc;
}

} // namespace

TEST_CASE("quotient mod <2> in Q(i)") {
  FieldDesc Qi = make_quadratic_field(-1);
  RingPtr ring = make_ring(Qi, ideal_from_rational(Qi, 2));
  CHECK(ring->nreps == 4);
  CHECK(ring->phi == 2);
  CHECK(ring->reduce(Element{3, 5}) == Element{1, 1});
  CHECK(ring->reduce(Element{-1, -1}) == Element{1, 1});
  CHECK(ring->is_unit(Element{1, 0}));
  CHECK(ring->is_unit(Element{0, 1}));
  CHECK_FALSE(ring->is_unit(Element{1, 1})); // shares the ramified prime
  CHECK_FALSE(ring->is_unit(Element{0, 0}));
}

TEST_CASE("quotient mod <2+i> in Q(i) collapses to five classes") {
  FieldDesc Qi = make_quadratic_field(-1);
  RingPtr ring = make_ring(Qi, principal_ideal(Qi, Element{2, 1}));
  CHECK(ring->nreps == 5);
  CHECK(ring->phi == 4);
  CHECK(ring->reduce(Element{2, 1}) == Element{0, 0});
  CHECK(ring->reduce(Element{0, 1}) == Element{3, 0}); // i = -2 mod <2+i>
  CHECK(ring->units.orders == std::vector<long long>{4});
}

TEST_CASE("reduction respects ring operations") {
  FieldDesc Qi = make_quadratic_field(-1);
  RingPtr ring = make_ring(Qi, ideal_from_rational(Qi, 6));
  REQUIRE(ring->nreps == 36);
  for (long long i = 0; i < ring->nreps; i += 5)
    for (long long j = 0; j < ring->nreps; j += 7) {
      Element a = ring->reps[(size_t)i], b = ring->reps[(size_t)j];
      CHECK(ring->mul_index(i, j) == ring->reduce_index(elem_mul(Qi, a, b)));
      CHECK(ring->add_index(i, j) == ring->reduce_index(elem_add(Qi, a, b)));
    }
  // reduce is idempotent and lift-independent on a sample
  Element e{-17, 23};
  CHECK(ring->reduce(e) == ring->reduce(ring->reduce(e)));
  Element shifted = elem_add(Qi, e, Element{6 * 4, 6 * 9});
  CHECK(ring->reduce(e) == ring->reduce(shifted));
}

TEST_CASE("unit counts agree with the totient of the modulus") {
  for (long long D : {-1LL, 5LL}) {
    FieldDesc K = make_quadratic_field(D);
    for (const Ideal& I : ideals_up_to_norm(K, 200, /*include_unit=*/true)) {
      RingPtr ring = make_ring(K, I);
      CHECK(ring->phi == euler_phi(I));
      CHECK(ring->nreps == ideal_norm(I));
    }
  }
  FieldDesc Q = make_rational_field();
  for (long long n = 1; n <= 200; ++n) {
    RingPtr ring = make_ring(Q, ideal_from_rational(Q, n));
    CHECK(ring->phi == euler_phi(ideal_from_rational(Q, n)));
  }
}

TEST_CASE("unit group invariant factors on known cases") {
  FieldDesc Q = make_rational_field();
  auto orders_of = [&](const FieldDesc& K, const Ideal& I) {
    return make_ring(K, I)->units.orders;
  };
  CHECK(orders_of(Q, ideal_from_rational(Q, 5)) == std::vector<long long>{4});
  CHECK(orders_of(Q, ideal_from_rational(Q, 8)) == std::vector<long long>{2, 2});
  CHECK(orders_of(Q, ideal_from_rational(Q, 15)) == std::vector<long long>{2, 4});
  CHECK(orders_of(Q, ideal_from_rational(Q, 16)) == std::vector<long long>{2, 4});
  CHECK(orders_of(Q, ideal_from_rational(Q, 24)) == std::vector<long long>{2, 2, 2});
  CHECK(orders_of(Q, ideal_from_rational(Q, 1)).empty());

  FieldDesc Qi = make_quadratic_field(-1);
  CHECK(orders_of(Qi, ideal_from_rational(Qi, 3)) == std::vector<long long>{8});
  CHECK(orders_of(Qi, principal_ideal(Qi, Element{2, 1})) ==
        std::vector<long long>{4});
  // (Z[i]/<1+i>^2)^* = {1, i, -1, -i} mod 2 ... = cyclic of order 2
  CHECK(orders_of(Qi, ideal_from_rational(Qi, 2)) == std::vector<long long>{2});
}

TEST_CASE("unit group structure is consistent on every small modulus") {
  for (long long D : {-1LL, -3LL, 5LL}) {
    FieldDesc K = make_quadratic_field(D);
    for (const Ideal& I : ideals_up_to_norm(K, 60, /*include_unit=*/true)) {
      RingPtr ring = make_ring(K, I);
      const UnitGroup& U = ring->units;
      long long prod = 1;
      for (size_t j = 0; j + 1 < U.orders.size(); ++j)
        CHECK(U.orders[j + 1] % U.orders[j] == 0);
      for (long long d : U.orders) prod *= d;
      CHECK(prod == ring->phi);

      // dlog rows reconstruct their unit, and are unique
      std::set<std::vector<int32_t>> seen;
      for (long long pos = 0; pos < ring->phi; ++pos) {
        long long rep = ring->unit_list[(size_t)pos];
        CHECK(unit_from_dlog(*ring, rep) == rep);
        std::vector<int32_t> row(
            U.dlog.begin() + (size_t)rep * U.generators.size(),
            U.dlog.begin() + ((size_t)rep + 1) * U.generators.size());
        CHECK(seen.insert(row).second);
      }
    }
  }
}

TEST_CASE("chinese remainder split mod 15") {
  FieldDesc Q = make_rational_field();
  RingPtr ring = make_ring(Q, ideal_from_rational(Q, 15));
  CrtSplit split = crt_split(ring, ideal_from_rational(Q, 3), ideal_from_rational(Q, 5));
  auto [e1, e2] = split.forward(Element{7, 0});
  CHECK(e1 == Element{1, 0});
  CHECK(e2 == Element{2, 0});
  CHECK(split.backward(Element{1, 0}, Element{2, 0}) == Element{7, 0});

  // bijection between the parent and the product of the parts
  std::set<std::pair<long long, long long>> images;
  for (long long i = 0; i < 15; ++i) {
    auto [a, b] = split.forward(ring->reps[(size_t)i]);
    images.insert({split.left->reduce_index(a), split.right->reduce_index(b)});
    CHECK(ring->reduce_index(split.backward(a, b)) == i);
  }
  CHECK(images.size() == 15);

  CHECK_THROWS_AS(crt_split(ring, ideal_from_rational(Q, 3), ideal_from_rational(Q, 3)),
                  DomainError);
  CHECK_THROWS_AS(crt_split(ring, ideal_from_rational(Q, 5), ideal_from_rational(Q, 5)),
                  DomainError);
}

TEST_CASE("chinese remainder split in Q(i)") {
  FieldDesc Qi = make_quadratic_field(-1);
  Ideal P = principal_ideal(Qi, Element{2, 1});
  Ideal two = ideal_from_rational(Qi, 2);
  RingPtr ring = make_ring(Qi, ideal_mul(P, two));
  CrtSplit split = crt_split(ring, P, two);
  for (long long i = 0; i < ring->nreps; ++i) {
    auto [a, b] = split.forward(ring->reps[(size_t)i]);
    CHECK(ring->reduce_index(split.backward(a, b)) == i);
    CHECK(ring->is_unit_index(i) ==
          (split.left->is_unit(a) && split.right->is_unit(b)));
  }
}

TEST_CASE("one-plus-prime-power cosets have the right size and shape") {
  FieldDesc Qi = make_quadratic_field(-1);
  Ideal P = principal_ideal(Qi, Element{1, 1});
  RingPtr ring = make_ring(Qi, ideal_pow(P, 3)); // norm 8
  for (int k = 1; k <= 3; ++k) {
    std::vector<Element> coset = coset_one_plus_pk(*ring, k);
    CHECK((long long)coset.size() == ideal_norm(ideal_pow(P, 3 - k)));
    for (const Element& e : coset) {
      CHECK(ring->is_unit(e));
      Element diff = elem_sub(Qi, e, Element{1, 0});
      CHECK(ideal_contains(ideal_pow(P, k), diff));
    }
  }
  CHECK(coset_one_plus_pk(*ring, 3) == std::vector<Element>{Element{1, 0}});
}

TEST_CASE("ring construction guards") {
  FieldDesc Q = make_rational_field();
  FieldDesc Qi = make_quadratic_field(-1);
  CHECK_THROWS_AS(make_ring(Q, zero_ideal(Q)), DomainError);
  CHECK_THROWS_AS(make_ring(Q, ideal_from_rational(Qi, 5)), DomainError);
  CHECK_THROWS_AS(make_ring(Q, ideal_from_rational(Q, 16), /*norm_cap=*/10),
                  BudgetError);
  CHECK(default_ring_norm_cap() == 10000); // env override is exercised in CLI tests
  RingPtr ok = make_ring(Q, ideal_from_rational(Q, 16), 16);
  CHECK(ok->nreps == 16);
}
