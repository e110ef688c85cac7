#pragma once

#include <vector>

/*
 * Self-contained verifiers for the classical gcd-sum identities over Z.
 * Everything here is rebuilt from scratch on plain integers — factorization,
 * unit-group structure via primitive roots and CRT, character tables, and
 * cyclotomic reduction — so it shares no code with the ideal machinery and
 * can serve as a disjoint oracle for the general engine at K = Q.
 */
namespace menon::oracle {

std::vector<std::pair<long long, int>> factorize(long long n);
long long mobius(long long n);
long long totient(long long n);
long long sigma(long long n, long long s);

// Unit pairs (a1, a2) mod n with a1 + a2 also a unit, counted directly.
long long phi2(long long n);

// Unit k-tuples whose sum is a unit, counted directly.
long long phi_k(long long n, long long k);

/*
 * A Dirichlet character mod n, tabulated on all residues: value_exp[a] is
 * the exponent e with chi(a) = zeta_order^e, or -1 when gcd(a, n) > 1.
 */
struct RationalCharacter {
  long long n = 1;
  long long order = 1;
  long long conductor = 1;
  std::vector<long long> value_exp;
  bool is_trivial() const { return order == 1; }
};

// All totient(n) characters mod n, the trivial one first.
std::vector<RationalCharacter> characters_mod(long long n);

// An exact value that is either a rational integer or a genuinely irrational
// combination of roots of unity; `reduced` holds the remainder modulo the
// order-th cyclotomic polynomial, constant coefficient first.
struct ExactValue {
  bool is_integer = true;
  long long value = 0;
  long long order = 1;
  std::vector<long long> reduced;
};

enum class IdentityId {
  menon,              // sum over units of gcd(a-1, n)
  sury,               // ... with s extra free variables b_i
  cao_zhao,           // character twist of menon
  li_hu_kim,          // character twist of sury
  toth,               // k unit variables with unit sum
  sita_ramaiah,       // two unit variables with unit sum
  ji_wang,            // character twist of sita_ramaiah
  character_menon_sury // character twist with two unit variables and s free ones
};

struct IdentityParams {
  long long n = 1;
  long long s = 0; // sury, li_hu_kim, character_menon_sury
  long long k = 1; // toth
  const RationalCharacter* chi = nullptr; // cao_zhao, li_hu_kim, ji_wang, character_menon_sury
};

// Brute-force left-hand side, exactly as each identity displays it.
ExactValue identity_lhs(IdentityId id, const IdentityParams& p);

// The matching closed form.  For toth the k-tuple count is assembled
// multiplicatively from per-prime-power brute counts, so left and right are
// computed along genuinely different routes.
long long identity_rhs(IdentityId id, const IdentityParams& p);

struct IdentityReport {
  IdentityId id{};
  long long n = 1;
  long long s = 0;
  long long k = 1;
  ExactValue lhs;
  long long rhs = 0;
  bool match = false;
};

IdentityReport verify_identity(IdentityId id, const IdentityParams& p);

} // namespace menon::oracle
