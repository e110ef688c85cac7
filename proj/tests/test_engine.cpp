#include <set>

#include "doctest.h"
#include "menon/engine.hpp"

using namespace menon;

namespace {

FieldDesc Q() { return make_rational_field(); }
FieldDesc Qi() { return make_quadratic_field(-1); }

RingPtr rational_ring(long long n) {
  FieldDesc K = Q();
  return make_ring(K, ideal_from_rational(K, n));
}

} // namespace

TEST_CASE("tuple gcd-class counts") {
  FieldDesc K = Qi();
  Ideal P = principal_ideal(K, Element{2, 1});
  CHECK(count_tuples_gcd(P, unit_ideal(K), 2) == 24); // 5^2 - 1
  CHECK(count_tuples_gcd(P, P, 2) == 1);
  CHECK(count_tuples_gcd(P, P, 0) == 1);              // the empty gcd is P
  CHECK(count_tuples_gcd(P, unit_ideal(K), 0) == 0);

  FieldDesc R = Q();
  Ideal four = ideal_from_rational(R, 4);
  CHECK(count_tuples_gcd(four, ideal_from_rational(R, 2), 1) == 1);
  CHECK(count_tuples_gcd(four, ideal_from_rational(R, 1), 1) == 2);
  CHECK(count_tuples_gcd(four, four, 1) == 1);

  // the classes partition all tuples: sum over divisors g of N(a/g)^s
  for (long long n : {6LL, 12LL, 9LL}) {
    Ideal I = ideal_from_rational(R, n);
    for (long long s = 0; s <= 3; ++s) {
      long long total = 0, expect = 1;
      for (const Ideal& g : divisors_of(I)) total += count_tuples_gcd(I, g, s);
      for (long long j = 0; j < s; ++j) expect *= n;
      CHECK(total == expect);
    }
  }
}

TEST_CASE("pinned evaluations at small moduli") {
  MenonEngine e5(rational_ring(5));
  std::vector<DirichletCharacter> chars5 = character_group(e5.ring());
  CHECK(e5.lhs_naive(chars5[0], 0) == 24);
  CHECK(e5.lhs_grouped(chars5[0], 0) == 24);
  CHECK(rhs_closed_form(chars5[0], 0) == 24);
  for (const DirichletCharacter& chi : chars5) {
    if (chi.is_trivial()) continue;
    CHECK(e5.lhs_naive(chi, 0) == -4);
    CHECK(e5.lhs_grouped(chi, 0) == -4);
    CHECK(rhs_closed_form(chi, 0) == -4);
  }

  // norm-4 modulus: every case vanishes (the prime has norm 2)
  MenonEngine e4(rational_ring(4));
  for (const DirichletCharacter& chi : character_group(e4.ring())) {
    CHECK(e4.lhs_naive(chi, 0) == 0);
    CHECK(rhs_closed_form(chi, 0) == 0);
  }

  // Gaussian prime of norm 5, one free variable
  FieldDesc K = Qi();
  RingPtr gring = make_ring(K, principal_ideal(K, Element{2, 1}));
  MenonEngine ge(gring);
  DirichletCharacter triv = trivial_character(gring);
  CHECK(ge.lhs_naive(triv, 1) == 72);
  CHECK(ge.lhs_grouped(triv, 1) == 72);
  CHECK(rhs_closed_form(triv, 1) == 72);

  // modulus 8 with a conductor-8 character: mu kills the closed form
  MenonEngine e8(rational_ring(8));
  for (const DirichletCharacter& chi : character_group(e8.ring())) {
    if (ideal_norm(chi.conductor) != 8) continue;
    CHECK(rhs_closed_form(chi, 0) == 0);
    CHECK(e8.lhs_naive(chi, 0) == 0);
  }
}

TEST_CASE("verification reports carry the full story") {
  MenonEngine e(rational_ring(12));
  for (const DirichletCharacter& chi : character_group(e.ring()))
    for (long long s = 0; s <= 1; ++s) {
      VerificationReport rep = e.verify_theorem(chi, s);
      CHECK(rep.match);
      REQUIRE(rep.lhs_naive.has_value());
      CHECK(*rep.lhs_naive == rep.lhs_grouped);
      CHECK(rep.lhs_grouped == rep.rhs_closed);
      CHECK(rep.s == s);
      CHECK(rep.chi_order == chi.order);
      CHECK(rep.conductor == chi.conductor);
      CHECK(ideal_divides(rep.a0, rep.modulus));
    }
}

TEST_CASE("naive and grouped enumerations agree everywhere small") {
  FieldDesc R = Q();
  for (long long n = 2; n <= 35; ++n) {
    MenonEngine e(rational_ring(n));
    for (const DirichletCharacter& chi : character_group(e.ring()))
      for (long long s = 0; s <= 1; ++s)
        CHECK(e.lhs_naive(chi, s) == e.lhs_grouped(chi, s));
  }
  for (long long D : {-3LL, 2LL}) {
    FieldDesc K = make_quadratic_field(D);
    for (const Ideal& I : ideals_up_to_norm(K, 13, /*include_unit=*/false)) {
      MenonEngine e(make_ring(K, I));
      for (const DirichletCharacter& chi : character_group(e.ring()))
        for (long long s = 0; s <= 2; ++s)
          CHECK(e.lhs_naive(chi, s) == e.lhs_grouped(chi, s));
    }
  }
}

TEST_CASE("random coset lifts do not change the naive sum") {
  MenonEngine e(rational_ring(9));
  std::vector<DirichletCharacter> chars = character_group(e.ring());
  for (unsigned long long seed : {1ULL, 2ULL, 42ULL}) {
    CHECK(e.lhs_naive_lifted(chars[0], 1, seed) == e.lhs_naive(chars[0], 1));
    CHECK(e.lhs_naive_lifted(chars[1], 1, seed) == e.lhs_naive(chars[1], 1));
  }

  FieldDesc K = Qi();
  RingPtr gring = make_ring(K, principal_ideal(K, Element{2, 1}));
  MenonEngine ge(gring);
  for (const DirichletCharacter& chi : character_group(gring))
    CHECK(ge.lhs_naive_lifted(chi, 1, 7) == ge.lhs_naive(chi, 1));
}

TEST_CASE("work budgets cut off oversized enumerations") {
  MenonEngine tiny(rational_ring(7), EngineConfig{10});
  DirichletCharacter triv = trivial_character(tiny.ring());
  CHECK_THROWS_AS(tiny.lhs_naive(triv, 0), BudgetError);
  CHECK_THROWS_AS(tiny.lhs_grouped(triv, 0), BudgetError);
  CHECK_THROWS_AS(tiny.lhs_naive_lifted(triv, 0, 1), BudgetError);

  // verify_theorem silently drops only the naive side when it alone is too big
  MenonEngine mid(rational_ring(30), EngineConfig{30 * 30 + 500});
  VerificationReport rep = mid.verify_theorem(trivial_character(mid.ring()), 2);
  CHECK_FALSE(rep.lhs_naive.has_value());
  CHECK(rep.match);
}

TEST_CASE("the sum is multiplicative along coprime splittings") {
  FieldDesc R = Q();
  RingPtr r15 = rational_ring(15);
  Ideal I1 = ideal_from_rational(R, 3), I2 = ideal_from_rational(R, 5);
  for (const DirichletCharacter& chi : character_group(r15))
    for (long long s = 0; s <= 2; ++s) {
      MultiplicativityReport rep = verify_multiplicativity(chi, I1, I2, s);
      CHECK(rep.match);
      CHECK(rep.combined == rep.left * rep.right);
    }

  // unit-ideal factor on one side is allowed and forces a trivial component
  RingPtr r6 = rational_ring(6);
  MultiplicativityReport unit_side = verify_multiplicativity(
      trivial_character(r6), unit_ideal(R), ideal_from_rational(R, 6), 1);
  CHECK(unit_side.match);
  CHECK(unit_side.left == 1);

  FieldDesc K = Qi();
  Ideal P = principal_ideal(K, Element{2, 1});
  Ideal two = ideal_from_rational(K, 2);
  RingPtr gring = make_ring(K, ideal_mul(P, two));
  for (const DirichletCharacter& chi : character_group(gring)) {
    MultiplicativityReport rep = verify_multiplicativity(chi, P, two, 0);
    CHECK(rep.match);
  }
}

TEST_CASE("prime-power building blocks: pinned cases") {
  EngineConfig cfg;

  // norm-2 ramified prime, modulus its square, trivial character
  FieldDesc K = Qi();
  Ideal P = principal_ideal(K, Element{1, 1});
  RingPtr r4 = make_ring(K, ideal_pow(P, 2));
  DirichletCharacter triv4 = trivial_character(r4);
  LemmaCase coset = verify_lemma(LemmaId::coset_character_sum, triv4, 1, -1, -1, cfg);
  CHECK(coset.match);
  CHECK(coset.brute == 2);
  CHECK(coset.t == 0);

  // rational prime 5, exponent 1
  RingPtr r5 = rational_ring(5);
  std::vector<DirichletCharacter> chars5 = character_group(r5);
  LemmaCase cong =
      verify_lemma(LemmaId::congruent_pair_sum, chars5[0], 1, -1, -1, cfg);
  CHECK(cong.match);
  CHECK(cong.brute == 3); // (2,4), (3,3), (4,2)

  LemmaCase cop = verify_lemma(LemmaId::coprime_pair_sum, chars5[0], -1, -1, -1, cfg);
  CHECK(cop.match);
  CHECK(cop.brute == 9); // 12 unit-sum pairs minus 3 with a1 + a2 = 1

  LemmaCase w_triv =
      verify_lemma(LemmaId::weighted_pair_sum, chars5[0], -1, 1, -1, cfg);
  CHECK(w_triv.match);
  CHECK(w_triv.brute == 24); // (r+1) * 12

  for (const DirichletCharacter& chi : chars5) {
    if (chi.is_trivial()) continue;
    LemmaCase w = verify_lemma(LemmaId::weighted_pair_sum, chi, -1, 1, -1, cfg);
    CHECK(w.match);
    CHECK(w.brute == -4); // -r * phi(5)
    CHECK(w.t == 1);
  }

  LemmaCase tup = verify_lemma(LemmaId::tuple_gcd_count, chars5[0], -1, 0, 2, cfg);
  CHECK(tup.match);
  CHECK(tup.brute == 24);

  LemmaCase ident =
      verify_lemma(LemmaId::prime_power_identity, chars5[1], -1, -1, 0, cfg);
  CHECK(ident.match);
  CHECK(ident.brute == -4);
}

TEST_CASE("lemma parameter validation") {
  RingPtr r6 = rational_ring(6); // not a prime power
  CHECK_THROWS_AS(verify_lemma(LemmaId::coprime_pair_sum, trivial_character(r6), -1,
                               -1, -1, EngineConfig{}),
                  DomainError);
  RingPtr r9 = rational_ring(9);
  DirichletCharacter triv = trivial_character(r9);
  CHECK_THROWS_AS(
      verify_lemma(LemmaId::coset_character_sum, triv, 0, -1, -1, EngineConfig{}),
      DomainError);
  CHECK_THROWS_AS(
      verify_lemma(LemmaId::coset_character_sum, triv, 3, -1, -1, EngineConfig{}),
      DomainError);
  CHECK_THROWS_AS(
      verify_lemma(LemmaId::weighted_pair_sum, triv, -1, 5, -1, EngineConfig{}),
      DomainError);
  CHECK_THROWS_AS(
      verify_lemma(LemmaId::tuple_gcd_count, triv, -1, 1, -1, EngineConfig{}),
      DomainError);
}

TEST_CASE("prime-power sweep produces one case per character") {
  FieldDesc R = Q();
  Ideal p5 = ideal_from_rational(R, 5);
  std::vector<LemmaCase> cases = verify_prime_power_cases(R, p5, 1, 0);
  REQUIRE(cases.size() == 4);
  std::multiset<long long> brutes;
  for (const LemmaCase& c : cases) {
    CHECK(c.match);
    brutes.insert(c.brute);
  }
  CHECK(brutes == std::multiset<long long>{-4, -4, -4, 24});

  // exponent 2: conductor valuations 0, 1 and 2 all occur mod 25
  std::vector<LemmaCase> c25 = verify_prime_power_cases(R, p5, 2, 1);
  REQUIRE(c25.size() == 20);
  std::set<int> tvals;
  for (const LemmaCase& c : c25) {
    CHECK(c.match);
    tvals.insert(c.t);
  }
  CHECK(tvals == std::set<int>{0, 1, 2});

  FieldDesc K = Qi();
  Ideal P2 = principal_ideal(K, Element{1, 1});
  for (const LemmaCase& c : verify_prime_power_cases(K, P2, 3, 2))
    CHECK(c.match);
}
