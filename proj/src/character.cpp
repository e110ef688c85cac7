#include "menon/character.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "menon/errors.hpp"

namespace menon {

CycValue CycValue::root(long long order, long long exp) {
  if (order < 1) throw DomainError("root of unity needs positive order");
  CycValue v;
  v.order = order;
  v.exp = floor_mod(exp, order);
  v.zero = false;
  // canonicalize so equal values compare equal componentwise
  long long g = gcd_ll(v.exp == 0 ? order : v.exp, order);
  if (v.exp == 0) {
    v.order = 1;
  } else if (g > 1) {
    v.order = order / g;
    v.exp = v.exp / g;
  }
  return v;
}

CycValue cyc_mul(const CycValue& a, const CycValue& b) {
  if (a.zero || b.zero) return CycValue::zero_value();
  long long m = lcm_ll(a.order, b.order);
  return CycValue::root(m, checked_add(checked_mul(a.exp, m / a.order),
                                       checked_mul(b.exp, m / b.order)));
}

bool cyc_equal(const CycValue& a, const CycValue& b) {
  if (a.zero || b.zero) return a.zero == b.zero;
  return a.order == b.order && a.exp == b.exp;
}

/*
 * Cyclotomic polynomials by repeated exact division:
 *   x^m - 1 = prod_{d | m} Phi_d(x)
 * so Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.  All divisions are exact
 * in Z[x] and checked to be so.
 */
namespace {

std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  if (den.empty() || den.back() != 1)
    throw InvariantError("cyclotomic division by non-monic polynomial");
  if (num.size() < den.size())
    throw InvariantError("cyclotomic division with short numerator");
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    long long coef = num[i + den.size() - 1];
    q[i] = coef;
    for (size_t j = 0; j < den.size(); ++j)
      num[i + j] = checked_sub(num[i + j], checked_mul(coef, den[j]));
  }
  for (long long r : num)
    if (r != 0) throw InvariantError("cyclotomic division left a remainder");
  return q;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(long long m) {
  if (m < 1) throw DomainError("cyclotomic polynomial index must be positive");
  thread_local std::map<long long, std::vector<long long>> memo;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::vector<long long> num((size_t)m + 1, 0);
  num[0] = -1;
  num[(size_t)m] = 1;
  for (long long d = 1; d < m; ++d)
    if (m % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  memo[m] = num;
  return num;
}

void CyclotomicSum::add(long long weight, const CycValue& v) {
  if (v.zero || weight == 0) return;
  if (m % v.order != 0)
    throw DomainError("cyclotomic sum cannot absorb value of incompatible order");
  size_t k = (size_t)(v.exp * (m / v.order));
  coeffs[k] += (i128)weight;
}

std::vector<i128> CyclotomicSum::reduced() const {
  std::vector<long long> phi = cyclotomic_polynomial(m);
  size_t deg = phi.size() - 1;
  std::vector<i128> rem = coeffs;
  if (rem.size() < deg) rem.resize(deg, 0);
  for (size_t i = rem.size(); i-- > deg;) {
    i128 coef = rem[i];
    if (coef == 0) continue;
    rem[i] = 0;
    for (size_t j = 0; j < deg; ++j) rem[i - deg + j] -= coef * (i128)phi[j];
  }
  rem.resize(deg);
  return rem;
}

bool CyclotomicSum::is_integer() const {
  std::vector<i128> rem = reduced();
  for (size_t i = 1; i < rem.size(); ++i)
    if (rem[i] != 0) return false;
  return true;
}

long long CyclotomicSum::as_integer() const {
  std::vector<i128> rem = reduced();
  for (size_t i = 1; i < rem.size(); ++i)
    if (rem[i] != 0) throw InvariantError("cyclotomic sum is not a rational integer");
  return rem.empty() ? 0 : checked_cast(rem[0]);
}

long long CyclotomicSum::require_integer(const char* what) const {
  if (!is_integer())
    throw InvariantError(std::string(what) + ": sum fails to collapse to an integer");
  return as_integer();
}

namespace {

// zeta-value of a unit with discrete log (l_1, ..., l_k) under exponents
// (e_1, ..., e_k): the product of zeta_{d_i}^{e_i l_i}.  Each factor
// canonicalizes to a root of unity whose order divides d_i / gcd(e_i, d_i),
// so the product's order divides the character order.
CycValue eval_on_unit(const RingPtr& ring, const std::vector<long long>& exps,
                      long long rep_index) {
  const size_t k = ring->units.orders.size();
  CycValue v = CycValue::one();
  for (size_t i = 0; i < k; ++i) {
    long long di = ring->units.orders[i];
    long long li = ring->units.dlog[(size_t)rep_index * k + i];
    v = cyc_mul(v, CycValue::root(di, checked_mul(exps[i], li)));
  }
  return v;
}

} // namespace

CycValue DirichletCharacter::operator()(long long rep_index) const {
  if (!ring->is_unit_index(rep_index)) return CycValue::zero_value();
  return eval_on_unit(ring, exps, rep_index);
}

namespace {

long long character_order(const RingPtr& ring, const std::vector<long long>& exps) {
  long long ord = 1;
  for (size_t i = 0; i < exps.size(); ++i) {
    long long di = ring->units.orders[i];
    ord = lcm_ll(ord, di / gcd_ll(exps[i] == 0 ? di : exps[i], di));
  }
  return ord;
}

// trivial on every unit congruent to 1 modulo f?
bool trivial_on_kernel(const RingPtr& ring, const std::vector<long long>& exps,
                       const Ideal& f) {
  for (long long u : ring->unit_list) {
    Element e = ring->reps[(size_t)u];
    Element em1 = elem_sub(ring->field, e, Element{1, 0});
    if (!ideal_contains(f, em1)) continue;
    if (!cyc_equal(eval_on_unit(ring, exps, u), CycValue::one())) return false;
  }
  return true;
}

Ideal find_conductor(const RingPtr& ring, const std::vector<long long>& exps) {
  std::vector<Ideal> divs = divisors_of(ring->modulus);
  Ideal best;
  bool found = false;
  for (const Ideal& f : divs) {
    if (trivial_on_kernel(ring, exps, f)) {
      if (!found) {
        best = f;
        found = true;
      } else if (!ideal_divides(best, f)) {
        throw InvariantError("conductor: passing moduli are not nested");
      }
    }
  }
  if (!found) throw InvariantError("conductor: modulus itself fails the kernel test");
  return best;
}

} // namespace

DirichletCharacter make_character(const RingPtr& ring, std::vector<long long> exps) {
  const size_t k = ring->units.orders.size();
  if (exps.size() != k)
    throw DomainError("character needs one exponent per unit-group generator");
  for (size_t i = 0; i < k; ++i) exps[i] = floor_mod(exps[i], ring->units.orders[i]);
  DirichletCharacter chi;
  chi.ring = ring;
  chi.exps = std::move(exps);
  chi.order = character_order(ring, chi.exps);
  chi.conductor = find_conductor(ring, chi.exps);
  return chi;
}

DirichletCharacter trivial_character(const RingPtr& ring) {
  return make_character(ring, std::vector<long long>(ring->units.orders.size(), 0));
}

std::vector<DirichletCharacter> character_group(const RingPtr& ring) {
  std::vector<DirichletCharacter> out;
  const size_t k = ring->units.orders.size();
  std::vector<long long> exps(k, 0);
  while (true) {
    out.push_back(make_character(ring, exps));
    size_t pos = 0;
    while (pos < k) {
      if (++exps[pos] < ring->units.orders[pos]) break;
      exps[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  if ((long long)out.size() != ring->phi)
    throw InvariantError("character group has wrong size");
  return out;
}

std::pair<DirichletCharacter, DirichletCharacter>
factor_character(const DirichletCharacter& chi, const Ideal& I1, const Ideal& I2) {
  CrtSplit split = crt_split(chi.ring, I1, I2);

  // Component on one side: evaluate chi on lifts that are 1 on the other
  // side, and solve for exponents on that side's own generators.
  auto component = [&](const RingPtr& side, bool side_is_left) -> DirichletCharacter {
    const size_t k = side->units.orders.size();
    std::vector<long long> exps(k, 0);
    for (size_t i = 0; i < k; ++i) {
      Element g = side->units.generators[i];
      Element lift = side_is_left ? split.backward(g, Element{1, 0})
                                  : split.backward(Element{1, 0}, g);
      CycValue val = chi.eval(lift);
      if (val.zero) throw InvariantError("character split: lift of a unit is not a unit");
      long long di = side->units.orders[i];
      // val = zeta_{val.order}^{val.exp} must be a d_i-th root of unity
      if (di % val.order != 0)
        throw InvariantError("character split: component value has wrong order");
      exps[i] = floor_mod(checked_mul(val.exp, di / val.order), di);
    }
    return make_character(side, exps);
  };

  DirichletCharacter chi1 = component(split.left, true);
  DirichletCharacter chi2 = component(split.right, false);

  // chi must equal the product of its components on every unit
  for (long long u : chi.ring->unit_list) {
    Element e = chi.ring->reps[(size_t)u];
    CycValue lhs = chi(u);
    CycValue rhs = cyc_mul(chi1.eval(e), chi2.eval(e));
    if (!cyc_equal(lhs, rhs))
      throw InvariantError("character split: components do not multiply back");
  }
  if (!(ideal_mul(chi1.conductor, chi2.conductor) == chi.conductor))
    throw InvariantError("character split: conductors do not multiply");
  return {chi1, chi2};
}

} // namespace menon
