#pragma once

#include <vector>

#include "menon/residue_ring.hpp"

namespace menon {

/*
 * A value in the cyclotomic field Q(zeta_order): either zero or the root of
 * unity zeta_order^exp.  Character values always have this shape, so products
 * and comparisons stay exact integer arithmetic on exponents.
 */
struct CycValue {
  long long order = 1; // which root of unity family
  long long exp = 0;   // exponent, taken mod order
  bool zero = false;

  static CycValue zero_value() { return CycValue{1, 0, true}; }
  static CycValue one() { return CycValue{1, 0, false}; }
  static CycValue root(long long order, long long exp);
};

CycValue cyc_mul(const CycValue& a, const CycValue& b);
bool cyc_equal(const CycValue& a, const CycValue& b);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(long long m);

/*
 * An exact integer combination of m-th roots of unity, stored as the
 * coefficient vector of a polynomial in zeta_m modulo x^m - 1.  Reduction
 * modulo the m-th cyclotomic polynomial decides whether the sum is a rational
 * integer, and extracts it when so.
 */
struct CyclotomicSum {
  long long m = 1;
  std::vector<i128> coeffs; // size m, exponent i carries coefficient of zeta^i

  explicit CyclotomicSum(long long m_ = 1) : m(m_), coeffs((size_t)m_, 0) {}

  void add(long long weight, const CycValue& v);

  // remainder after division by the m-th cyclotomic polynomial (degree < phi(m))
  std::vector<i128> reduced() const;

  bool is_integer() const;
  long long as_integer() const;                  // requires is_integer()
  long long require_integer(const char* what) const;
};

/*
 * A character of the unit group of a residue ring, stored as one exponent per
 * unit-group generator: the character maps generator i to
 * zeta_{d_i}^{exps[i]} where d_i is the generator's order.  order is the lcm
 * of the individual value orders; conductor is the smallest divisor f of the
 * modulus such that the character is trivial on units congruent to 1 mod f.
 */
struct DirichletCharacter {
  RingPtr ring;
  std::vector<long long> exps;
  long long order = 1;
  Ideal conductor;

  bool is_trivial() const { return order == 1; }

  // value on the residue with the given ring index; zero off the units
  CycValue operator()(long long rep_index) const;
  CycValue eval(const Element& e) const { return (*this)(ring->reduce_index(e)); }
};

DirichletCharacter make_character(const RingPtr& ring, std::vector<long long> exps);
DirichletCharacter trivial_character(const RingPtr& ring);

// All phi(modulus) characters; the trivial one first, then odometer order
// over generator exponents.
std::vector<DirichletCharacter> character_group(const RingPtr& ring);

/*
 * Split a character on R/(I1*I2) into its components on R/I1 and R/I2 along
 * the Chinese-remainder isomorphism, so that chi(x) = chi1(x) * chi2(x) for
 * every unit x.  Conductors multiply across the split.
 */
std::pair<DirichletCharacter, DirichletCharacter>
factor_character(const DirichletCharacter& chi, const Ideal& I1, const Ideal& I2);

} // namespace menon
