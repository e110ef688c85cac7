#include <numeric>
#include <set>

#include "doctest.h"
#include "menon/engine.hpp"
#include "menon/oracle.hpp"

namespace orc = menon::oracle;

TEST_CASE("scalar helpers") {
  CHECK(orc::factorize(1).empty());
  CHECK(orc::factorize(12) ==
        std::vector<std::pair<long long, int>>{{2, 2}, {3, 1}});
  CHECK(orc::mobius(1) == 1);
  CHECK(orc::mobius(12) == 0);
  CHECK(orc::mobius(30) == -1);
  CHECK(orc::totient(1) == 1);
  CHECK(orc::totient(12) == 4);
  CHECK(orc::sigma(6, 0) == 4);
  CHECK(orc::sigma(6, 1) == 12);
  CHECK(orc::sigma(4, 2) == 21);
}

TEST_CASE("unit tuple counts") {
  CHECK(orc::phi2(5) == 12);
  CHECK(orc::phi2(4) == 0);
  CHECK(orc::phi2(9) == 18); // 3^2 * (3-1) * (3-2)
  CHECK(orc::phi_k(5, 2) == 12);
  CHECK(orc::phi_k(4, 2) == 0);
  CHECK(orc::phi_k(5, 3) == 52);
  for (long long n = 1; n <= 30; ++n) {
    CHECK(orc::phi_k(n, 1) == orc::totient(n));
    CHECK(orc::phi_k(n, 2) == orc::phi2(n));
  }
}

TEST_CASE("character tables mod n") {
  for (long long n = 1; n <= 30; ++n) {
    std::vector<orc::RationalCharacter> chars = orc::characters_mod(n);
    CHECK((long long)chars.size() == orc::totient(n));
    CHECK(chars.front().is_trivial());
    for (const orc::RationalCharacter& chi : chars) {
      // multiplicative on units, -1 off units
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
          bool unit = std::gcd(a, n) == 1 && std::gcd(b, n) == 1;
          if (!unit) continue;
          long long va = chi.value_exp[(size_t)a], vb = chi.value_exp[(size_t)b];
          CHECK(chi.value_exp[(size_t)(a * b % n)] == (va + vb) % chi.order);
        }
      for (long long a = 0; a < n; ++a)
        CHECK((chi.value_exp[(size_t)a] == -1) == (std::gcd(a, n) != 1));
    }
  }

  std::vector<orc::RationalCharacter> mod8 = orc::characters_mod(8);
  std::multiset<long long> conductors;
  for (const orc::RationalCharacter& chi : mod8) conductors.insert(chi.conductor);
  CHECK(conductors == std::multiset<long long>{1, 4, 8, 8});

  std::multiset<long long> orders5;
  for (const orc::RationalCharacter& chi : orc::characters_mod(5))
    orders5.insert(chi.order);
  CHECK(orders5 == std::multiset<long long>{1, 2, 4, 4});
}

TEST_CASE("distinct characters have distinct value tables") {
  for (long long n : {8LL, 12LL, 15LL, 16LL, 24LL}) {
    std::set<std::vector<long long>> tables;
    for (const orc::RationalCharacter& chi : orc::characters_mod(n)) {
      std::vector<long long> normalized(chi.value_exp);
      long long scale = 24 / chi.order; // lcm-normalize into a common order
      REQUIRE(24 % chi.order == 0);
      for (long long& v : normalized)
        if (v >= 0) v *= scale;
      CHECK(tables.insert(normalized).second);
    }
  }
}

TEST_CASE("pinned identity values") {
  orc::IdentityParams p;

  p.n = 4;
  CHECK(orc::identity_lhs(orc::IdentityId::menon, p).value == 6);
  CHECK(orc::identity_rhs(orc::IdentityId::menon, p) == 6);

  p.s = 1;
  CHECK(orc::identity_lhs(orc::IdentityId::sury, p).value == 14);
  CHECK(orc::identity_rhs(orc::IdentityId::sury, p) == 14);

  p = {};
  p.n = 5;
  CHECK(orc::identity_lhs(orc::IdentityId::sita_ramaiah, p).value == 24);
  p.k = 2;
  CHECK(orc::identity_lhs(orc::IdentityId::toth, p).value == 24);
  CHECK(orc::identity_rhs(orc::IdentityId::toth, p) == 24);

  // order-4 character mod 5: chi(2) = zeta_4
  std::vector<orc::RationalCharacter> chars5 = orc::characters_mod(5);
  const orc::RationalCharacter* chi4 = nullptr;
  for (const orc::RationalCharacter& chi : chars5)
    if (chi.order == 4 && chi.value_exp[2] == 1) chi4 = &chi;
  REQUIRE(chi4 != nullptr);

  p = {};
  p.n = 5;
  p.chi = chi4;
  CHECK(orc::identity_lhs(orc::IdentityId::cao_zhao, p).value == 4);
  CHECK(orc::identity_rhs(orc::IdentityId::cao_zhao, p) == 4);
  CHECK(orc::identity_lhs(orc::IdentityId::ji_wang, p).value == -4);
  CHECK(orc::identity_rhs(orc::IdentityId::ji_wang, p) == -4);
  p.s = 2;
  CHECK(orc::identity_lhs(orc::IdentityId::character_menon_sury, p).value == -4);
  CHECK(orc::identity_rhs(orc::IdentityId::character_menon_sury, p) == -4);
}

TEST_CASE("character sums that stay irrational are reported as such") {
  // sum over units of chi(a) * gcd-weight can be irrational for no identity
  // here, but a lone root of unity must round-trip through ExactValue
  std::vector<orc::RationalCharacter> chars5 = orc::characters_mod(5);
  for (const orc::RationalCharacter& chi : chars5) {
    orc::IdentityParams p;
    p.n = 5;
    p.chi = &chi;
    orc::ExactValue v = orc::identity_lhs(orc::IdentityId::ji_wang, p);
    CHECK(v.is_integer); // these sums always reduce to integers
  }
}

TEST_CASE("every classical identity verifies on a sweep") {
  for (long long n = 1; n <= 36; ++n) {
    orc::IdentityParams p;
    p.n = n;
    CHECK(orc::verify_identity(orc::IdentityId::menon, p).match);
    for (long long s = 0; s <= 2; ++s) {
      p.s = s;
      CHECK(orc::verify_identity(orc::IdentityId::sury, p).match);
    }
    p.s = 0;
    for (long long k = 1; k <= 3; ++k) {
      p.k = k;
      CHECK(orc::verify_identity(orc::IdentityId::toth, p).match);
    }
    p.k = 1;
    CHECK(orc::verify_identity(orc::IdentityId::sita_ramaiah, p).match);

    for (const orc::RationalCharacter& chi : orc::characters_mod(n)) {
      p.chi = &chi;
      CHECK(orc::verify_identity(orc::IdentityId::cao_zhao, p).match);
      CHECK(orc::verify_identity(orc::IdentityId::ji_wang, p).match);
      for (long long s = 0; s <= 2; ++s) {
        p.s = s;
        CHECK(orc::verify_identity(orc::IdentityId::li_hu_kim, p).match);
        CHECK(orc::verify_identity(orc::IdentityId::character_menon_sury, p).match);
      }
      p.s = 0;
    }
    p.chi = nullptr;
  }
}

TEST_CASE("oracle and engine agree at a rational modulus") {
  using namespace menon;
  FieldDesc Q = make_rational_field();
  RingPtr ring = make_ring(Q, ideal_from_rational(Q, 12));
  MenonEngine engine(ring);
  DirichletCharacter triv = trivial_character(ring);
  orc::IdentityParams p;
  p.n = 12;
  orc::RationalCharacter triv12 = orc::characters_mod(12).front();
  p.chi = &triv12;
  for (long long s = 0; s <= 2; ++s) {
    p.s = s;
    orc::ExactValue lhs = orc::identity_lhs(orc::IdentityId::character_menon_sury, p);
    REQUIRE(lhs.is_integer);
    CHECK(lhs.value == engine.lhs_naive(triv, s));
  }
}

TEST_CASE("identity parameter guards") {
  orc::IdentityParams p;
  p.n = 5;
  CHECK_THROWS_AS(orc::identity_lhs(orc::IdentityId::cao_zhao, p),
                  std::invalid_argument); // needs a character
  orc::RationalCharacter wrong = orc::characters_mod(7).front();
  p.chi = &wrong;
  CHECK_THROWS_AS(orc::identity_lhs(orc::IdentityId::cao_zhao, p),
                  std::invalid_argument); // modulus mismatch
}
