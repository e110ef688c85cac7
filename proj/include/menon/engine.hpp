#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "menon/arith.hpp"
#include "menon/character.hpp"

namespace menon {

struct EngineConfig {
  // Ceiling on elementary enumeration steps a single evaluation may take.
  // The naive evaluator needs about N^{s+2} steps for a modulus of norm N;
  // the grouped one needs about N^2.  Exceeding the ceiling raises
  // BudgetError instead of silently running long.
  long long work_budget = 100000000;
};

struct VerificationReport {
  FieldDesc field;
  Ideal modulus;
  std::vector<long long> chi_exps;
  long long chi_order = 1;
  Ideal conductor;
  Ideal a0; // part of the modulus supported on the conductor's primes
  long long s = 0;
  std::optional<long long> lhs_naive; // absent when over budget
  long long lhs_grouped = 0;
  long long rhs_closed = 0;
  bool match = false;
  long long ms = 0;
};

struct MultiplicativityReport {
  long long combined = 0; // sum over the full modulus
  long long left = 0;
  long long right = 0;
  bool match = false;
};

// Number of s-tuples (b_1, ..., b_s) modulo a whose gcd together with a is
// exactly g (an ideal divisor of a).  For s = 0 the empty gcd is a itself.
long long count_tuples_gcd(const Ideal& a, const Ideal& g, long long s);

// Right-hand side of the twisted identity:
//   mu(d) * phi(a0^2 / d) * phi_pairs(a / a0) * sigma_s(a / d)
// with d the conductor of chi and a0 the d-supported part of the modulus.
long long rhs_closed_form(const DirichletCharacter& chi, long long s);

/*
 * Evaluator for the character-weighted gcd sum
 *
 *   S(a, chi, s) = sum over a1, a2, b_1, ..., b_s in R = O/a,
 *                  a1, a2 and a1 + a2 all units,
 *                  of N(gcd(a1 + a2 - 1, b_1, ..., b_s, a)) * chi(a1)
 *
 * in three independent ways: a literal enumeration, a divisor-grouped
 * enumeration, and the closed form above.  The character-independent weight
 * tables are cached per exponent s, so sweeping a whole character group costs
 * one enumeration.  An engine is not thread-safe; confine it to one thread.
 */
class MenonEngine {
public:
  explicit MenonEngine(RingPtr ring, EngineConfig cfg = {});

  const RingPtr& ring() const { return ring_; }

  // Direct enumeration of all pairs and tuples (about N^{s+2} steps).
  long long lhs_naive(const DirichletCharacter& chi, long long s);

  // Same enumeration, but every residue is first replaced by a random
  // coset representative drawn with the given seed.  The result must not
  // depend on the seed; that invariance is what callers test.
  long long lhs_naive_lifted(const DirichletCharacter& chi, long long s,
                             unsigned long long seed);

  // Enumeration grouped by gcd class (about N^2 steps, shared across s).
  long long lhs_grouped(const DirichletCharacter& chi, long long s);

  // Grouped + closed form always; naive when it fits the budget.
  VerificationReport verify_theorem(const DirichletCharacter& chi, long long s);

private:
  void require_same_ring(const DirichletCharacter& chi) const;
  void ensure_pair_classes();
  const std::vector<long long>& naive_weights(long long s);
  const std::vector<long long>& grouped_weights(long long s);
  long long weighted_character_sum(const std::vector<long long>& w,
                                   const DirichletCharacter& chi) const;
  std::vector<long long> enumerate_weights(const std::vector<int32_t>& rep_class,
                                           const std::vector<int32_t>& pair_class,
                                           long long s) const;

  RingPtr ring_;
  EngineConfig cfg_;

  std::vector<Ideal> divisors_;
  std::vector<long long> div_norm_;
  std::vector<int32_t> meet_;  // divisor-lattice gcd, flattened D x D
  std::vector<int32_t> gidx_;  // divisor index of gcd(<rep>, modulus) per rep
  std::vector<int32_t> pair_gidx_; // divisor class of a1 + a2 - 1, flattened phi x phi (lazy)
  bool have_pair_gidx_ = false;

  std::vector<std::vector<long long>> pair_count_; // [divisor][unit pos], lazy
  bool have_pair_count_ = false;

  std::map<long long, std::vector<long long>> naive_w_;   // per s
  std::map<long long, std::vector<long long>> grouped_w_; // per s

  int32_t divisor_index(const Ideal& d) const;
};

// Check S(a1 a2, chi, s) = S(a1, chi1, s) * S(a2, chi2, s) for the
// factorization of chi along coprime I1 * I2 = modulus.
MultiplicativityReport verify_multiplicativity(const DirichletCharacter& chi,
                                               const Ideal& I1, const Ideal& I2,
                                               long long s, EngineConfig cfg = {});

/*
 * The per-prime building blocks of the identity, each checked two ways: a
 * brute-force sum over the residue ring of P^m against its closed form.
 * Throughout, N = N(P) and t is the valuation of the character's conductor
 * at P.
 */
enum class LemmaId {
  coset_character_sum, // sum of chi over 1 + P^k
  congruent_pair_sum,  // sum of chi(a1) over unit pairs with a1 + a2 = 1 mod P^k
  coprime_pair_sum,    // sum of chi(a1) over unit pairs with a1 + a2 and a1 + a2 - 1 units
  weighted_pair_sum,   // as above but weighted by N(gcd(a1 + a2 - 1, P^r))
  tuple_gcd_count,     // number of s-tuples with gcd exactly P^r
  prime_power_identity // the full identity at a prime-power modulus
};

struct LemmaCase {
  LemmaId id{};
  FieldDesc field;
  Ideal prime;
  int m = 1;
  int t = 0;
  int k = -1;
  int r = -1;
  long long s = -1;
  std::vector<long long> chi_exps;
  long long brute = 0;
  long long closed = 0;
  bool match = false;
};

// Run one lemma check on chi's ring, which must be modulo a prime power.
// k is used by the coset and congruent sums, r by the weighted sum and the
// tuple count, s by the tuple count and the full identity; unused parameters
// are ignored and recorded as -1.
LemmaCase verify_lemma(LemmaId id, const DirichletCharacter& chi, int k, int r,
                       long long s, EngineConfig cfg = {});

// The full identity at the modulus prime^m, one case per character mod
// prime^m, each matched against the three-case closed form selected by t.
std::vector<LemmaCase> verify_prime_power_cases(const FieldDesc& field,
                                                const Ideal& prime, int m,
                                                long long s, EngineConfig cfg = {});

} // namespace menon
