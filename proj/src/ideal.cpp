#include "menon/ideal.hpp"

#include <algorithm>

#include "menon/errors.hpp"

namespace menon {

namespace {

i128 igcd128(i128 x, i128 y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

i128 ext_gcd128(i128 a, i128 b, i128& x, i128& y) {
  i128 old_r = a, r = b;
  i128 old_x = 1, cur_x = 0;
  i128 old_y = 0, cur_y = 1;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
    t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

// Row-reduces generator rows (u, v) = u + v*omega into the Hermite form
// {(a, 0), (b, c)}.  Every combination step is unimodular, so the spanned
// lattice never changes; i128 intermediates absorb Bezout growth and the
// omega-row offset b is reduced mod a as soon as a pure row is known.
struct HnfAcc {
  i128 a = 0;
  i128 b = 0, c = 0;

  void reduce_b() {
    if (a != 0 && c != 0) {
      b %= a;
      if (b < 0) b += (a < 0 ? -a : a);
    }
  }

  void add_pure(i128 u) {
    a = igcd128(a, u);
    reduce_b();
  }

  void add(i128 u, i128 v) {
    if (v == 0) {
      if (u != 0) add_pure(u);
      return;
    }
    if (c == 0) {
      b = u;
      c = v;
      reduce_b();
      return;
    }
    i128 x, y;
    i128 g = ext_gcd128(c, v, x, y);
    i128 nb = x * b + y * u;
    i128 pure = (v / g) * b - (c / g) * u;
    b = nb;
    c = g;
    if (pure != 0) add_pure(pure);
    reduce_b();
  }

  Ideal finish(const FieldDesc& K) {
    if (a == 0 && c == 0) return zero_ideal(K);
    if (a == 0 || c == 0)
      throw InvariantError("ideal generators span a rank-1 lattice");
    if (a < 0) a = -a;
    if (c < 0) { b = -b; c = -c; }
    b %= a;
    if (b < 0) b += a;
    Ideal I;
    I.field = K;
    I.zero = false;
    I.a = checked_cast(a);
    I.b = checked_cast(b);
    I.c = checked_cast(c);
    if (I.a % I.c != 0 || I.b % I.c != 0)
      throw InvariantError("HNF of an ideal must satisfy c | a and c | b");
    return I;
  }
};

// Membership of an element in a nonzero quadratic ideal lattice.
bool lattice_member(const Ideal& I, Element e) {
  if (e.y % I.c != 0) return false;
  i128 q = e.y / I.c;
  i128 t = (i128)e.x - q * I.b;
  return t % I.a == 0;
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same_field(const Ideal& I, const Ideal& J, const char* what) {
  if (!(I.field == J.field))
    throw DomainError(std::string(what) + ": ideals of different fields");
}

} // namespace

bool Ideal::is_unit_ideal() const {
  if (zero) return false;
  return field.is_rational() ? n == 1 : (a == 1 && c == 1);
}

Ideal zero_ideal(const FieldDesc& K) {
  Ideal I;
  I.field = K;
  I.zero = true;
  I.n = 0;
  return I;
}

Ideal unit_ideal(const FieldDesc& K) {
  return ideal_from_rational(K, 1);
}

Ideal ideal_from_rational(const FieldDesc& K, long long n) {
  n = abs_ll(n);
  if (n == 0) return zero_ideal(K);
  Ideal I;
  I.field = K;
  I.zero = false;
  if (K.is_rational()) {
    I.n = n;
  } else {
    // n * O_K has basis {n, n*omega}
    I.a = n;
    I.b = 0;
    I.c = n;
  }
  return I;
}

Ideal ideal_from_hnf(const FieldDesc& K, long long a, long long b, long long c) {
  if (K.is_rational())
    throw DomainError("HNF triples describe ideals of quadratic fields");
  if (a <= 0 || c <= 0 || b < 0 || b >= a || a % c != 0 || b % c != 0)
    throw DomainError("HNF triple violates canonicality (need a,c > 0, c|a, c|b, 0 <= b < a)");
  Ideal I;
  I.field = K;
  I.zero = false;
  I.a = a;
  I.b = b;
  I.c = c;
  const Element omega{0, 1};
  if (!lattice_member(I, elem_mul(K, Element{a, 0}, omega)) ||
      !lattice_member(I, elem_mul(K, Element{b, c}, omega)))
    throw DomainError("HNF triple is not closed under multiplication by omega");
  return I;
}

Ideal ideal_from_generators(const FieldDesc& K, const std::vector<Element>& gens) {
  if (K.is_rational()) {
    long long g = 0;
    for (const Element& e : gens) {
      if (e.y != 0) throw DomainError("rational field element with an omega part");
      g = gcd_ll(g, e.x);
    }
    return ideal_from_rational(K, g);
  }
  HnfAcc acc;
  const Element omega{0, 1};
  for (const Element& e : gens) {
    acc.add(e.x, e.y);
    Element w = elem_mul(K, e, omega);
    acc.add(w.x, w.y);
  }
  return acc.finish(K);
}

Ideal principal_ideal(const FieldDesc& K, Element e) {
  return ideal_from_generators(K, {e});
}

long long ideal_norm(const Ideal& I) {
  if (I.zero) return 0;
  return I.field.is_rational() ? I.n : checked_mul(I.a, I.c);
}

bool ideal_contains(const Ideal& I, Element e) {
  if (I.zero) return elem_is_zero(e);
  if (I.field.is_rational()) return e.y == 0 && e.x % I.n == 0;
  return lattice_member(I, e);
}

bool ideal_divides(const Ideal& J, const Ideal& I) {
  require_same_field(I, J, "ideal_divides");
  if (J.zero) return I.zero;
  if (I.zero) return true;
  if (I.field.is_rational()) return I.n % J.n == 0;
  return lattice_member(J, Element{I.a, 0}) && lattice_member(J, Element{I.b, I.c});
}

Ideal ideal_gcd(const Ideal& I, const Ideal& J) {
  require_same_field(I, J, "ideal_gcd");
  if (I.zero && J.zero) throw DomainError("ideal_gcd of two zero ideals");
  if (I.zero) return J;
  if (J.zero) return I;
  if (I.field.is_rational())
    return ideal_from_rational(I.field, gcd_ll(I.n, J.n));
  HnfAcc acc;
  acc.add(I.a, 0);
  acc.add(I.b, I.c);
  acc.add(J.a, 0);
  acc.add(J.b, J.c);
  return acc.finish(I.field);
}

Ideal ideal_mul(const Ideal& I, const Ideal& J) {
  require_same_field(I, J, "ideal_mul");
  if (I.zero || J.zero) return zero_ideal(I.field);
  if (I.field.is_rational())
    return ideal_from_rational(I.field, checked_mul(I.n, J.n));
  const FieldDesc& K = I.field;
  std::vector<Element> gens;
  const Element bi[2] = {Element{I.a, 0}, Element{I.b, I.c}};
  const Element bj[2] = {Element{J.a, 0}, Element{J.b, J.c}};
  for (const Element& u : bi)
    for (const Element& v : bj) gens.push_back(elem_mul(K, u, v));
  return ideal_from_generators(K, gens);
}

Ideal ideal_pow(const Ideal& I, int e) {
  if (e < 0) throw DomainError("ideal_pow with negative exponent");
  Ideal acc = unit_ideal(I.field);
  for (int i = 0; i < e; ++i) acc = ideal_mul(acc, I);
  return acc;
}

Ideal ideal_div_exact(const Ideal& I, const Ideal& J) {
  require_same_field(I, J, "ideal_div_exact");
  if (I.zero || J.zero) throw DomainError("ideal_div_exact with a zero operand");
  if (!ideal_divides(J, I)) throw DomainError("ideal_div_exact: not a divisor");
  if (I.field.is_rational())
    return ideal_from_rational(I.field, I.n / J.n);
  // I / J = I * conj(J) / N(J): the conjugate ideal clears J to <N(J)>.
  const FieldDesc& K = I.field;
  Ideal Jc = ideal_from_generators(
      K, {elem_conj(K, Element{J.a, 0}), elem_conj(K, Element{J.b, J.c})});
  Ideal P = ideal_mul(I, Jc);
  long long NJ = ideal_norm(J);
  if (P.a % NJ != 0 || P.b % NJ != 0 || P.c % NJ != 0)
    throw InvariantError("ideal_div_exact: conjugate product not divisible by the norm");
  Ideal Q;
  Q.field = K;
  Q.zero = false;
  Q.a = P.a / NJ;
  Q.b = P.b / NJ;
  Q.c = P.c / NJ;
  if (!(ideal_mul(Q, J) == I))
    throw InvariantError("ideal_div_exact: quotient check failed");
  return Q;
}

bool ideal_less(const Ideal& I, const Ideal& J) {
  long long ni = ideal_norm(I), nj = ideal_norm(J);
  if (ni != nj) return ni < nj;
  if (I.field.is_rational()) return I.n < J.n;
  if (I.a != J.a) return I.a < J.a;
  if (I.b != J.b) return I.b < J.b;
  return I.c < J.c;
}

int kronecker_symbol(long long d, long long p) {
  if (p == 2) {
    long long m = floor_mod(d, 8);
    if (m % 2 == 0) return 0;
    return (m == 1 || m == 7) ? 1 : -1;
  }
  long long m = floor_mod(d, p);
  if (m == 0) return 0;
  return pow_mod(m, (p - 1) / 2, p) == 1 ? 1 : -1;
}

PrimeSplit split_prime(const FieldDesc& K, long long p) {
  if (!is_prime_ll(p)) throw DomainError("split_prime requires a rational prime");
  PrimeSplit out;
  if (K.is_rational()) {
    out.type = SplitType::rational_prime;
    out.primes = {ideal_from_rational(K, p)};
    return out;
  }
  // Roots of the minimal polynomial x^2 - t x - s of omega modulo p select the
  // primes <p, omega - r> above p.
  std::vector<long long> roots;
  for (long long r = 0; r < p; ++r) {
    i128 v = (i128)r * r - (i128)K.omega_sq_w * r - (i128)K.omega_sq_c;
    if (floor_mod128(v, p) == 0) roots.push_back(r);
  }
  int sym = kronecker_symbol(K.disc, p);
  auto prime_at = [&](long long r) {
    Ideal P = ideal_from_generators(K, {Element{p, 0}, Element{-r, 1}});
    if (ideal_norm(P) != p) throw InvariantError("split_prime: degree-one prime with wrong norm");
    return P;
  };
  if (roots.size() == 2) {
    if (sym != 1) throw InvariantError("split_prime: root count contradicts the Kronecker symbol");
    out.type = SplitType::split;
    out.primes = {prime_at(roots[0]), prime_at(roots[1])};
    std::sort(out.primes.begin(), out.primes.end(), ideal_less);
  } else if (roots.size() == 1) {
    if (sym != 0) throw InvariantError("split_prime: root count contradicts the Kronecker symbol");
    out.type = SplitType::ramified;
    out.primes = {prime_at(roots[0])};
    if (!(ideal_mul(out.primes[0], out.primes[0]) == ideal_from_rational(K, p)))
      throw InvariantError("split_prime: ramified prime square is not <p>");
  } else if (roots.empty()) {
    if (sym != -1) throw InvariantError("split_prime: root count contradicts the Kronecker symbol");
    out.type = SplitType::inert;
    out.primes = {ideal_from_rational(K, p)};
  } else {
    throw InvariantError("split_prime: more than two roots of a quadratic");
  }
  return out;
}

int ideal_valuation(const Ideal& I, const Ideal& P) {
  require_same_field(I, P, "ideal_valuation");
  if (I.zero) throw DomainError("ideal_valuation of the zero ideal");
  int v = 0;
  Ideal J = I;
  while (ideal_divides(P, J)) {
    J = ideal_div_exact(J, P);
    ++v;
  }
  return v;
}

IdealFactorization factor_ideal(const Ideal& I) {
  if (I.zero) throw DomainError("factor_ideal of the zero ideal");
  IdealFactorization out;
  if (I.is_unit_ideal()) return out;
  long long N = ideal_norm(I);
  std::vector<long long> ps;
  long long v = N;
  for (long long p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  for (long long p : ps) {
    if (I.field.is_rational()) {
      int e = 0;
      long long m = I.n;
      while (m % p == 0) { m /= p; ++e; }
      out.push_back({ideal_from_rational(I.field, p), e});
      continue;
    }
    for (const Ideal& P : split_prime(I.field, p).primes) {
      int e = ideal_valuation(I, P);
      if (e > 0) out.push_back({P, e});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IdealFactor& x, const IdealFactor& y) { return ideal_less(x.prime, y.prime); });
  if (!(reassemble(I.field, out) == I))
    throw InvariantError("factor_ideal: product of prime powers differs from the input");
  return out;
}

Ideal reassemble(const FieldDesc& K, const IdealFactorization& f) {
  Ideal acc = unit_ideal(K);
  for (const IdealFactor& pf : f) acc = ideal_mul(acc, ideal_pow(pf.prime, pf.exponent));
  return acc;
}

std::vector<Ideal> divisors_of(const Ideal& I) {
  if (I.zero) throw DomainError("divisors_of the zero ideal");
  IdealFactorization f = factor_ideal(I);
  std::vector<Ideal> out = {unit_ideal(I.field)};
  for (const IdealFactor& pf : f) {
    std::vector<Ideal> next;
    next.reserve(out.size() * (pf.exponent + 1));
    for (const Ideal& d : out) {
      Ideal cur = d;
      next.push_back(cur);
      for (int j = 1; j <= pf.exponent; ++j) {
        cur = ideal_mul(cur, pf.prime);
        next.push_back(cur);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

std::vector<Ideal> ideals_up_to_norm(const FieldDesc& K, long long max_norm, bool include_unit) {
  std::vector<Ideal> out;
  if (max_norm < 1) return out;
  if (K.is_rational()) {
    for (long long n = include_unit ? 1 : 2; n <= max_norm; ++n)
      out.push_back(ideal_from_rational(K, n));
    return out;
  }
  std::vector<Ideal> primes;
  for (long long p = 2; p <= max_norm; ++p) {
    if (!is_prime_ll(p)) continue;
    for (const Ideal& P : split_prime(K, p).primes)
      if (ideal_norm(P) <= max_norm) primes.push_back(P);
  }
  std::sort(primes.begin(), primes.end(), ideal_less);
  // products of powers of distinct prime ideals, one representation each
  auto rec = [&](auto&& self, size_t idx, const Ideal& cur) -> void {
    out.push_back(cur);
    for (size_t j = idx; j < primes.size(); ++j) {
      Ideal J = cur;
      while (true) {
        if ((i128)ideal_norm(J) * ideal_norm(primes[j]) > max_norm) break;
        J = ideal_mul(J, primes[j]);
        self(self, j + 1, J);
      }
    }
  };
  rec(rec, 0, unit_ideal(K));
  if (!include_unit)
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Ideal& I) { return I.is_unit_ideal(); }),
              out.end());
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

} // namespace menon
