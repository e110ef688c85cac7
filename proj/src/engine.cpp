#include "menon/engine.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>

#include "menon/errors.hpp"

namespace menon {

namespace {

bool pow_within(long long base, long long exp, long long limit) {
  i128 acc = 1;
  for (long long i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > (i128)limit) return false;
  }
  return true;
}

} // namespace

long long count_tuples_gcd(const Ideal& a, const Ideal& g, long long s) {
  if (s < 0) throw DomainError("count_tuples_gcd: negative tuple length");
  if (!ideal_divides(g, a)) throw DomainError("count_tuples_gcd: g must divide a");
  Ideal q = ideal_div_exact(a, g);
  long long total = 0;
  for (const Ideal& t : divisors_of(q)) {
    long long mu = mobius(t);
    if (mu == 0) continue;
    long long nq = ideal_norm(ideal_div_exact(q, t));
    total = checked_add(total, checked_mul(mu, checked_pow(nq, s)));
  }
  return total;
}

long long rhs_closed_form(const DirichletCharacter& chi, long long s) {
  const Ideal& a = chi.ring->modulus;
  const Ideal& d = chi.conductor;
  Ideal a0 = compute_a0(a, d);
  long long mu = mobius(d);
  long long phi_part = euler_phi(ideal_div_exact(ideal_mul(a0, a0), d));
  long long pairs_part = phi_pairs(ideal_div_exact(a, a0));
  long long sigma_part = sigma_power(ideal_div_exact(a, d), s);
  return checked_mul(checked_mul(mu, phi_part), checked_mul(pairs_part, sigma_part));
}

MenonEngine::MenonEngine(RingPtr ring, EngineConfig cfg)
    : ring_(std::move(ring)), cfg_(cfg) {
  divisors_ = divisors_of(ring_->modulus);
  const size_t D = divisors_.size();
  div_norm_.resize(D);
  for (size_t i = 0; i < D; ++i) div_norm_[i] = ideal_norm(divisors_[i]);

  meet_.assign(D * D, -1);
  for (size_t i = 0; i < D; ++i)
    for (size_t j = 0; j <= i; ++j) {
      int32_t k = divisor_index(ideal_gcd(divisors_[i], divisors_[j]));
      meet_[i * D + j] = k;
      meet_[j * D + i] = k;
    }

  gidx_.resize((size_t)ring_->nreps);
  for (long long i = 0; i < ring_->nreps; ++i)
    gidx_[(size_t)i] = divisor_index(
        ideal_gcd(principal_ideal(ring_->field, ring_->reps[(size_t)i]), ring_->modulus));
}

int32_t MenonEngine::divisor_index(const Ideal& d) const {
  for (size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] == d) return (int32_t)i;
  throw InvariantError("divisor lattice does not contain a computed gcd");
}

void MenonEngine::require_same_ring(const DirichletCharacter& chi) const {
  if (chi.ring != ring_)
    throw DomainError("character belongs to a different residue ring");
}

// Valid-pair classes: pair_gidx_[u1*phi + u2] is the divisor class of
// a1 + a2 - 1 when a1 + a2 is a unit, else -1.
void MenonEngine::ensure_pair_classes() {
  if (have_pair_gidx_) return;
  if (!pow_within(ring_->nreps, 2, cfg_.work_budget))
    throw BudgetError("pair enumeration of norm " + std::to_string(ring_->nreps) +
                      " exceeds the work budget");
  const long long phi = ring_->phi;
  pair_gidx_.assign((size_t)(phi * phi), -1);
  for (long long p1 = 0; p1 < phi; ++p1) {
    long long u1 = ring_->unit_list[(size_t)p1];
    for (long long p2 = 0; p2 < phi; ++p2) {
      long long u2 = ring_->unit_list[(size_t)p2];
      long long sum = ring_->add_index(u1, u2);
      if (!ring_->is_unit_index(sum)) continue;
      long long c = ring_->reduce_index(
          elem_sub(ring_->field, ring_->reps[(size_t)sum], Element{1, 0}));
      pair_gidx_[(size_t)(p1 * phi + p2)] = gidx_[(size_t)c];
    }
  }
  have_pair_gidx_ = true;
}

/*
 * The literal inner enumeration.  For every valid pair (indexed through
 * pair_class) walk all N^s tuples (b_1, ..., b_s) by odometer, keeping a
 * suffix chain of partial gcd classes so that advancing digit p only
 * recomputes p+1 table lookups.  rep_class[i] is the divisor class of
 * gcd(<rep_i>, a); the meet table turns class pairs into gcd classes.
 */
std::vector<long long> MenonEngine::enumerate_weights(
    const std::vector<int32_t>& rep_class, const std::vector<int32_t>& pair_class,
    long long s) const {
  const long long N = ring_->nreps;
  const long long phi = ring_->phi;
  const size_t D = divisors_.size();
  std::vector<long long> w((size_t)phi, 0);
  std::vector<long long> digits((size_t)s, 0);
  std::vector<int32_t> pm((size_t)s + 1, 0);

  for (long long p1 = 0; p1 < phi; ++p1) {
    long long acc = 0;
    for (long long p2 = 0; p2 < phi; ++p2) {
      int32_t g0 = pair_class[(size_t)(p1 * phi + p2)];
      if (g0 < 0) continue;
      if (s == 0) {
        acc = checked_add(acc, div_norm_[(size_t)g0]);
        continue;
      }
      std::fill(digits.begin(), digits.end(), 0);
      pm[(size_t)s] = g0;
      for (long long j = s - 1; j >= 0; --j)
        pm[(size_t)j] = meet_[(size_t)pm[(size_t)j + 1] * D + (size_t)rep_class[0]];
      while (true) {
        acc = checked_add(acc, div_norm_[(size_t)pm[0]]);
        long long pos = 0;
        while (pos < s && ++digits[(size_t)pos] == N) {
          digits[(size_t)pos] = 0;
          ++pos;
        }
        if (pos == s) break;
        for (long long j = pos; j >= 0; --j)
          pm[(size_t)j] = meet_[(size_t)pm[(size_t)j + 1] * D +
                                (size_t)rep_class[(size_t)digits[(size_t)j]]];
      }
    }
    w[(size_t)p1] = acc;
  }
  return w;
}

const std::vector<long long>& MenonEngine::naive_weights(long long s) {
  auto it = naive_w_.find(s);
  if (it != naive_w_.end()) return it->second;
  if (!pow_within(ring_->nreps, s + 2, cfg_.work_budget))
    throw BudgetError("naive enumeration of norm " + std::to_string(ring_->nreps) +
                      " with " + std::to_string(s) + " extra factors exceeds the work budget");
  ensure_pair_classes();
  return naive_w_.emplace(s, enumerate_weights(gidx_, pair_gidx_, s)).first->second;
}

const std::vector<long long>& MenonEngine::grouped_weights(long long s) {
  auto it = grouped_w_.find(s);
  if (it != grouped_w_.end()) return it->second;
  ensure_pair_classes();
  const long long phi = ring_->phi;
  const size_t D = divisors_.size();

  if (!have_pair_count_) {
    pair_count_.assign(D, std::vector<long long>((size_t)phi, 0));
    for (long long p1 = 0; p1 < phi; ++p1)
      for (long long p2 = 0; p2 < phi; ++p2) {
        int32_t g = pair_gidx_[(size_t)(p1 * phi + p2)];
        if (g >= 0) ++pair_count_[(size_t)g][(size_t)p1];
      }
    have_pair_count_ = true;
  }

  // tuples grouped by their gcd class h, then folded against each pair class
  std::vector<long long> cnt(D);
  for (size_t h = 0; h < D; ++h) cnt[h] = count_tuples_gcd(ring_->modulus, divisors_[h], s);
  std::vector<long long> inner(D, 0);
  for (size_t g = 0; g < D; ++g) {
    long long acc = 0;
    for (size_t h = 0; h < D; ++h)
      acc = checked_add(acc, checked_mul(div_norm_[(size_t)meet_[g * D + h]], cnt[h]));
    inner[g] = acc;
  }
  std::vector<long long> w((size_t)phi, 0);
  for (size_t g = 0; g < D; ++g)
    for (long long p1 = 0; p1 < phi; ++p1)
      w[(size_t)p1] = checked_add(w[(size_t)p1],
                                  checked_mul(inner[g], pair_count_[g][(size_t)p1]));
  return grouped_w_.emplace(s, std::move(w)).first->second;
}

long long MenonEngine::weighted_character_sum(const std::vector<long long>& w,
                                              const DirichletCharacter& chi) const {
  CyclotomicSum acc(chi.order);
  for (long long p = 0; p < ring_->phi; ++p)
    acc.add(w[(size_t)p], chi(ring_->unit_list[(size_t)p]));
  return acc.require_integer("character-weighted gcd sum");
}

long long MenonEngine::lhs_naive(const DirichletCharacter& chi, long long s) {
  require_same_ring(chi);
  if (s < 0) throw DomainError("negative tuple length");
  return weighted_character_sum(naive_weights(s), chi);
}

long long MenonEngine::lhs_grouped(const DirichletCharacter& chi, long long s) {
  require_same_ring(chi);
  if (s < 0) throw DomainError("negative tuple length");
  return weighted_character_sum(grouped_weights(s), chi);
}

long long MenonEngine::lhs_naive_lifted(const DirichletCharacter& chi, long long s,
                                        unsigned long long seed) {
  require_same_ring(chi);
  if (s < 0) throw DomainError("negative tuple length");
  if (!pow_within(ring_->nreps, s + 2, cfg_.work_budget))
    throw BudgetError("lifted enumeration exceeds the work budget");

  // replace each canonical representative by a random member of its coset
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> lam(-8, 8);
  const FieldDesc& K = ring_->field;
  Element b1{ring_->box_a, 0};
  Element b2{ring_->box_b, ring_->box_c};
  const bool quad = !K.is_rational();
  std::vector<Element> lift((size_t)ring_->nreps);
  for (long long i = 0; i < ring_->nreps; ++i) {
    Element e = ring_->reps[(size_t)i];
    e = elem_add(K, e, Element{checked_mul(lam(rng), b1.x), 0});
    if (quad) {
      long long l2 = lam(rng);
      e = elem_add(K, e, Element{checked_mul(l2, b2.x), checked_mul(l2, b2.y)});
    }
    lift[(size_t)i] = e;
  }

  // classes recomputed from the lifts, never read off the canonical tables
  std::vector<int32_t> rep_class((size_t)ring_->nreps);
  for (long long i = 0; i < ring_->nreps; ++i)
    rep_class[(size_t)i] = divisor_index(
        ideal_gcd(principal_ideal(K, lift[(size_t)i]), ring_->modulus));

  const long long phi = ring_->phi;
  std::vector<int32_t> pair_class((size_t)(phi * phi), -1);
  for (long long p1 = 0; p1 < phi; ++p1) {
    long long u1 = ring_->unit_list[(size_t)p1];
    for (long long p2 = 0; p2 < phi; ++p2) {
      long long u2 = ring_->unit_list[(size_t)p2];
      if (!ring_->is_unit_index(ring_->add_index(u1, u2))) continue;
      Element c = elem_sub(K, elem_add(K, lift[(size_t)u1], lift[(size_t)u2]),
                           Element{1, 0});
      pair_class[(size_t)(p1 * phi + p2)] =
          divisor_index(ideal_gcd(principal_ideal(K, c), ring_->modulus));
    }
  }
  return weighted_character_sum(enumerate_weights(rep_class, pair_class, s), chi);
}

VerificationReport MenonEngine::verify_theorem(const DirichletCharacter& chi, long long s) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.field = ring_->field;
  rep.modulus = ring_->modulus;
  rep.chi_exps = chi.exps;
  rep.chi_order = chi.order;
  rep.conductor = chi.conductor;
  rep.a0 = compute_a0(ring_->modulus, chi.conductor);
  rep.s = s;
  rep.lhs_grouped = lhs_grouped(chi, s);
  rep.rhs_closed = rhs_closed_form(chi, s);
  if (pow_within(ring_->nreps, s + 2, cfg_.work_budget))
    rep.lhs_naive = lhs_naive(chi, s);
  rep.match = rep.lhs_grouped == rep.rhs_closed &&
              (!rep.lhs_naive || *rep.lhs_naive == rep.lhs_grouped);
  rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  return rep;
}

MultiplicativityReport verify_multiplicativity(const DirichletCharacter& chi,
                                               const Ideal& I1, const Ideal& I2,
                                               long long s, EngineConfig cfg) {
  auto [chi1, chi2] = factor_character(chi, I1, I2);
  MenonEngine whole(chi.ring, cfg);
  MenonEngine left(chi1.ring, cfg);
  MenonEngine right(chi2.ring, cfg);
  MultiplicativityReport rep;
  rep.combined = whole.lhs_grouped(chi, s);
  rep.left = left.lhs_grouped(chi1, s);
  rep.right = right.lhs_grouped(chi2, s);
  rep.match = rep.combined == checked_mul(rep.left, rep.right);
  return rep;
}

namespace {

struct PrimePowerRing {
  Ideal prime;
  int m = 1;
  long long Np = 0;
  std::vector<int> val; // valuation of each representative, capped at m
};

PrimePowerRing analyze_prime_power(const ResidueRing& ring) {
  IdealFactorization f = factor_ideal(ring.modulus);
  if (f.size() != 1)
    throw DomainError("lemma check requires a prime-power modulus");
  PrimePowerRing pp;
  pp.prime = f[0].prime;
  pp.m = f[0].exponent;
  pp.Np = ideal_norm(pp.prime);
  std::vector<Ideal> powers;
  for (int j = 1; j <= pp.m; ++j) powers.push_back(ideal_pow(pp.prime, j));
  pp.val.assign((size_t)ring.nreps, 0);
  for (long long i = 0; i < ring.nreps; ++i) {
    int v = 0;
    while (v < pp.m && ideal_contains(powers[(size_t)v], ring.reps[(size_t)i])) ++v;
    pp.val[(size_t)i] = v;
  }
  return pp;
}

long long npow(long long n, long long e) { return checked_pow(n, e); }

// Closed form of the identity at modulus P^m for a character whose conductor
// has valuation t at P.
long long prime_power_closed(const Ideal& prime, int m, int t, long long s) {
  if (t == 0)
    return checked_mul(phi_pairs(ideal_pow(prime, m)),
                       sigma_power(ideal_pow(prime, m), s));
  if (t == 1)
    return checked_mul(-euler_phi(ideal_pow(prime, 2 * m - 1)),
                       sigma_power(ideal_pow(prime, m - 1), s));
  return 0;
}

} // namespace

LemmaCase verify_lemma(LemmaId id, const DirichletCharacter& chi, int k, int r,
                       long long s, EngineConfig cfg) {
  const RingPtr& ring = chi.ring;
  PrimePowerRing pp = analyze_prime_power(*ring);
  const long long N = pp.Np;
  const int m = pp.m;
  LemmaCase cs;
  cs.id = id;
  cs.field = ring->field;
  cs.prime = pp.prime;
  cs.m = m;
  cs.t = ideal_valuation(chi.conductor, pp.prime);
  cs.chi_exps = chi.exps;
  const int t = cs.t;

  auto pair_scan = [&](auto&& per_pair) {
    for (long long u1 : ring->unit_list)
      for (long long u2 : ring->unit_list) {
        long long sum = ring->add_index(u1, u2);
        long long c = ring->reduce_index(
            elem_sub(ring->field, ring->reps[(size_t)sum], Element{1, 0}));
        per_pair((long long)u1, sum, c);
      }
  };

  switch (id) {
    case LemmaId::coset_character_sum: {
      if (k < 1 || k > m) throw DomainError("coset sum needs 1 <= k <= m");
      cs.k = k;
      CyclotomicSum acc(chi.order);
      for (const Element& e : coset_one_plus_pk(*ring, k)) acc.add(1, chi.eval(e));
      cs.brute = acc.require_integer("coset character sum");
      cs.closed = t <= k ? npow(N, m - k) : 0;
      break;
    }
    case LemmaId::congruent_pair_sum: {
      if (k < 1 || k > m) throw DomainError("congruent pair sum needs 1 <= k <= m");
      cs.k = k;
      CyclotomicSum acc(chi.order);
      pair_scan([&](long long u1, long long, long long c) {
        if (pp.val[(size_t)c] >= k) acc.add(1, chi(u1));
      });
      cs.brute = acc.require_integer("congruent pair sum");
      if (t == 0)
        cs.closed = checked_mul(npow(N, m - k),
                                checked_sub(npow(N, m), checked_mul(2, npow(N, m - 1))));
      else if (t == 1)
        cs.closed = -npow(N, 2 * m - k - 1);
      else
        cs.closed = 0;
      break;
    }
    case LemmaId::coprime_pair_sum: {
      CyclotomicSum acc(chi.order);
      pair_scan([&](long long u1, long long sum, long long c) {
        if (ring->is_unit_index(sum) && pp.val[(size_t)c] == 0) acc.add(1, chi(u1));
      });
      cs.brute = acc.require_integer("coprime pair sum");
      if (t == 0) {
        long long phi1 = checked_sub(npow(N, m), npow(N, m - 1));
        long long other = checked_sub(npow(N, m), checked_mul(3, npow(N, m - 1)));
        cs.closed = checked_add(checked_mul(phi1, other), npow(N, 2 * m - 2));
      } else if (t == 1) {
        cs.closed = npow(N, 2 * m - 2);
      } else {
        cs.closed = 0;
      }
      break;
    }
    case LemmaId::weighted_pair_sum: {
      if (r < 0 || r > m) throw DomainError("weighted pair sum needs 0 <= r <= m");
      cs.r = r;
      CyclotomicSum acc(chi.order);
      pair_scan([&](long long u1, long long sum, long long c) {
        if (!ring->is_unit_index(sum)) return;
        acc.add(npow(N, std::min(pp.val[(size_t)c], r)), chi(u1));
      });
      cs.brute = acc.require_integer("weighted pair sum");
      if (t == 0)
        cs.closed = checked_mul(r + 1, phi_pairs(ring->modulus));
      else if (t == 1)
        cs.closed = checked_mul(-(long long)r,
                                euler_phi(ideal_pow(pp.prime, 2 * m - 1)));
      else
        cs.closed = 0;
      break;
    }
    case LemmaId::tuple_gcd_count: {
      if (r < 0 || r > m) throw DomainError("tuple count needs 0 <= r <= m");
      if (s < 0) throw DomainError("tuple count needs s >= 0");
      cs.r = r;
      cs.s = s;
      if (!pow_within(ring->nreps, s, cfg.work_budget))
        throw BudgetError("tuple enumeration exceeds the work budget");
      long long total = 0;
      std::vector<long long> digits((size_t)s, 0);
      while (true) {
        int v = m;
        for (long long j = 0; j < s; ++j)
          v = std::min(v, pp.val[(size_t)digits[(size_t)j]]);
        if (v == r) ++total;
        long long pos = 0;
        while (pos < s && ++digits[(size_t)pos] == ring->nreps) {
          digits[(size_t)pos] = 0;
          ++pos;
        }
        if (pos == s) break;
      }
      cs.brute = total;
      cs.closed = r == m ? 1
                         : checked_sub(npow(N, (m - r) * s), npow(N, (m - r - 1) * s));
      break;
    }
    case LemmaId::prime_power_identity: {
      if (s < 0) throw DomainError("identity needs s >= 0");
      cs.s = s;
      MenonEngine engine(ring, cfg);
      cs.brute = pow_within(ring->nreps, s + 2, cfg.work_budget)
                     ? engine.lhs_naive(chi, s)
                     : engine.lhs_grouped(chi, s);
      cs.closed = prime_power_closed(pp.prime, m, t, s);
      break;
    }
  }
  cs.match = cs.brute == cs.closed;
  return cs;
}

std::vector<LemmaCase> verify_prime_power_cases(const FieldDesc& field,
                                                const Ideal& prime, int m,
                                                long long s, EngineConfig cfg) {
  if (m < 1) throw DomainError("prime-power cases need m >= 1");
  if (s < 0) throw DomainError("prime-power cases need s >= 0");
  RingPtr ring = make_ring(field, ideal_pow(prime, m));
  MenonEngine engine(ring, cfg);
  const bool naive_ok = pow_within(ring->nreps, s + 2, cfg.work_budget);
  std::vector<LemmaCase> out;
  for (const DirichletCharacter& chi : character_group(ring)) {
    LemmaCase cs;
    cs.id = LemmaId::prime_power_identity;
    cs.field = field;
    cs.prime = prime;
    cs.m = m;
    cs.t = ideal_valuation(chi.conductor, prime);
    cs.s = s;
    cs.chi_exps = chi.exps;
    cs.brute = naive_ok ? engine.lhs_naive(chi, s) : engine.lhs_grouped(chi, s);
    cs.closed = prime_power_closed(prime, m, cs.t, s);
    cs.match = cs.brute == cs.closed;
    out.push_back(std::move(cs));
  }
  return out;
}

} // namespace menon
