#include "menon/residue_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "menon/errors.hpp"

namespace menon {

namespace {

long long qpow_ll(long long q, int e) {
  long long r = 1;
  while (e-- > 0) r = checked_mul(r, q);
  return r;
}

// Greedy basis of one Sylow q-subgroup, largest order first.  The classic
// adjustment u' = u * prod g_i^{-v_i / q^j} is sound inside a q-group because
// every previous generator order q^{a_i} dominates q^j, forcing q^j | v_i.
struct QBasis {
  long long q = 0;
  std::vector<long long> gens; // ring rep indices
  std::vector<int> ords;       // orders q^ords[i], non-increasing
};

QBasis sylow_basis(const ResidueRing& R, long long q, int v, long long cofactor) {
  QBasis out;
  out.q = q;
  const long long qsize = qpow_ll(q, v);

  // image of the units under u -> u^cofactor: the whole Sylow q-subgroup
  std::vector<char> seen((size_t)R.nreps, 0);
  std::vector<long long> sq;
  sq.reserve((size_t)qsize);
  for (long long u : R.unit_list) {
    long long w = R.pow_index(u, cofactor);
    if (!seen[(size_t)w]) {
      seen[(size_t)w] = 1;
      sq.push_back(w);
    }
  }
  std::sort(sq.begin(), sq.end());
  if ((long long)sq.size() != qsize)
    throw InvariantError("unit group: Sylow subgroup has unexpected size");

  std::unordered_map<long long, std::vector<long long>> span;
  span.emplace(R.one_index, std::vector<long long>{});
  while ((long long)span.size() < qsize) {
    long long best_u = -1;
    int best_j = 0;
    for (long long u : sq) {
      if (span.count(u)) continue;
      int j = 0;
      long long w = u;
      while (!span.count(w)) {
        w = R.pow_index(w, q);
        ++j;
      }
      if (j > best_j) {
        best_j = j;
        best_u = u;
      }
    }
    if (best_u < 0) throw InvariantError("unit group: span cannot grow");
    long long hw = R.pow_index(best_u, qpow_ll(q, best_j));
    std::vector<long long> vh = span.at(hw);
    long long adj = best_u;
    for (size_t i = 0; i < out.gens.size(); ++i) {
      long long pj = qpow_ll(q, best_j);
      if (vh[i] % pj != 0)
        throw InvariantError("unit group: adjustment exponent not divisible");
      long long oi = qpow_ll(q, out.ords[i]);
      adj = R.mul_index(adj, R.pow_index(out.gens[i], floor_mod(-(vh[i] / pj), oi)));
    }
    if (R.pow_index(adj, qpow_ll(q, best_j)) != R.one_index ||
        R.pow_index(adj, qpow_ll(q, best_j - 1)) == R.one_index)
      throw InvariantError("unit group: adjusted generator has wrong order");
    if (!out.ords.empty() && best_j > out.ords.back())
      throw InvariantError("unit group: quotient orders must not increase");
    out.gens.push_back(adj);
    out.ords.push_back(best_j);

    // respan over the enlarged basis
    span.clear();
    std::vector<long long> digits(out.gens.size(), 0);
    while (true) {
      long long prod = R.one_index;
      for (size_t i = 0; i < out.gens.size(); ++i)
        if (digits[i] != 0) prod = R.mul_index(prod, R.pow_index(out.gens[i], digits[i]));
      if (!span.emplace(prod, digits).second)
        throw InvariantError("unit group: span products collide");
      size_t pos = 0;
      while (pos < digits.size()) {
        if (++digits[pos] < qpow_ll(q, out.ords[pos])) break;
        digits[pos] = 0;
        ++pos;
      }
      if (pos == digits.size()) break;
    }
  }
  return out;
}

UnitGroup compute_unit_group(const ResidueRing& R) {
  UnitGroup ug;
  ug.order = R.phi;
  if (R.phi == 1) {
    ug.exponent = 1;
    return ug;
  }

  std::vector<std::pair<long long, int>> qf;
  long long m = R.phi;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int v = 0;
      while (m % p == 0) { m /= p; ++v; }
      qf.push_back({p, v});
    }
  }
  if (m > 1) qf.push_back({m, 1});

  std::vector<QBasis> bases;
  size_t nslots = 0;
  for (auto [q, v] : qf) {
    bases.push_back(sylow_basis(R, q, v, R.phi / qpow_ll(q, v)));
    nslots = std::max(nslots, bases.back().gens.size());
  }

  // invariant factors: align the per-prime cyclic pieces largest-with-largest
  std::vector<long long> gen_idx(nslots);
  std::vector<long long> ords(nslots, 1);
  for (size_t s = 0; s < nslots; ++s) {
    long long g = R.one_index;
    for (const QBasis& qb : bases) {
      if (s < qb.gens.size()) {
        g = R.mul_index(g, qb.gens[s]);
        ords[s] = checked_mul(ords[s], qpow_ll(qb.q, qb.ords[s]));
      }
    }
    gen_idx[s] = g;
  }
  // slots are built in non-increasing order; store ascending d1 | d2 | ... | dk
  std::reverse(gen_idx.begin(), gen_idx.end());
  std::reverse(ords.begin(), ords.end());
  for (size_t s = 0; s + 1 < ords.size(); ++s)
    if (ords[s + 1] % ords[s] != 0)
      throw InvariantError("unit group: invariant factors do not divide in turn");

  const size_t k = gen_idx.size();
  ug.orders = ords;
  ug.exponent = ords.empty() ? 1 : ords.back();
  for (long long gi : gen_idx) ug.generators.push_back(R.reps[(size_t)gi]);

  // full discrete-log table by enumerating every exponent tuple once
  ug.dlog.assign((size_t)R.nreps * k, -1);
  std::vector<long long> digits(k, 0);
  long long filled = 0;
  while (true) {
    long long prod = R.one_index;
    for (size_t i = 0; i < k; ++i)
      if (digits[i] != 0) prod = R.mul_index(prod, R.pow_index(gen_idx[i], digits[i]));
    if (ug.dlog[(size_t)prod * k] != -1)
      throw InvariantError("unit group: exponent vectors are not unique");
    for (size_t i = 0; i < k; ++i) ug.dlog[(size_t)prod * k + i] = (int32_t)digits[i];
    ++filled;
    size_t pos = 0;
    while (pos < k) {
      if (++digits[pos] < ords[pos]) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  if (filled != R.phi)
    throw InvariantError("unit group: generator span misses units");
  return ug;
}

} // namespace

Element ResidueRing::reduce(Element e) const {
  if (field.is_rational()) return Element{floor_mod(e.x, box_a), 0};
  long long y = floor_mod(e.y, box_c);
  i128 kq = ((i128)e.y - y) / box_c;
  long long x = floor_mod128((i128)e.x - kq * box_b, box_a);
  return Element{x, y};
}

long long ResidueRing::mul_index(long long i, long long j) const {
  return reduce_index(elem_mul(field, reps[(size_t)i], reps[(size_t)j]));
}

long long ResidueRing::add_index(long long i, long long j) const {
  return reduce_index(elem_add(field, reps[(size_t)i], reps[(size_t)j]));
}

long long ResidueRing::pow_index(long long i, long long e) const {
  if (e < 0) throw DomainError("pow_index with negative exponent");
  long long acc = one_index;
  long long base = i;
  while (e > 0) {
    if (e & 1) acc = mul_index(acc, base);
    base = mul_index(base, base);
    e >>= 1;
  }
  return acc;
}

long long default_ring_norm_cap() {
  static const long long cap = [] {
    if (const char* s = std::getenv("MENON_MAX_RING_NORM")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
    }
    return 10000LL;
  }();
  return cap;
}

RingPtr make_ring(const FieldDesc& K, const Ideal& modulus) {
  return make_ring(K, modulus, default_ring_norm_cap());
}

RingPtr make_ring(const FieldDesc& K, const Ideal& modulus, long long norm_cap) {
  if (!(modulus.field == K)) throw DomainError("make_ring: modulus from a different field");
  if (modulus.is_zero()) throw DomainError("make_ring: zero modulus");
  long long N = ideal_norm(modulus);
  if (N > norm_cap)
    throw BudgetError("make_ring: norm " + std::to_string(N) + " above ring bound " +
                      std::to_string(norm_cap));
  auto R = std::make_shared<ResidueRing>();
  R->field = K;
  R->modulus = modulus;
  if (K.is_rational()) {
    R->box_a = modulus.n;
    R->box_b = 0;
    R->box_c = 1;
  } else {
    R->box_a = modulus.a;
    R->box_b = modulus.b;
    R->box_c = modulus.c;
  }
  R->nreps = N;
  R->reps.reserve((size_t)N);
  for (long long i = 0; i < N; ++i)
    R->reps.push_back(Element{i % R->box_a, i / R->box_a});
  R->one_index = R->reduce_index(Element{1, 0});

  R->unit_flag.assign((size_t)N, 0);
  R->unit_pos.assign((size_t)N, -1);
  for (long long i = 0; i < N; ++i) {
    Ideal g = ideal_gcd(principal_ideal(K, R->reps[(size_t)i]), modulus);
    if (g.is_unit_ideal()) {
      R->unit_flag[(size_t)i] = 1;
      R->unit_pos[(size_t)i] = (int32_t)R->unit_list.size();
      R->unit_list.push_back((int32_t)i);
    }
  }
  R->phi = (long long)R->unit_list.size();
  R->units = compute_unit_group(*R);
  return R;
}

std::pair<Element, Element> CrtSplit::forward(Element e) const {
  return {left->reduce(e), right->reduce(e)};
}

Element CrtSplit::backward(Element e1, Element e2) const {
  long long i1 = left->reduce_index(e1);
  long long i2 = right->reduce_index(e2);
  long long idx = back[(size_t)(i1 * right->nreps + i2)];
  return parent->reps[(size_t)idx];
}

CrtSplit crt_split(const RingPtr& ring, const Ideal& I1, const Ideal& I2) {
  if (!(ideal_mul(I1, I2) == ring->modulus))
    throw DomainError("crt_split: factors do not multiply to the modulus");
  if (!ideal_gcd(I1, I2).is_unit_ideal())
    throw DomainError("crt_split: factors are not coprime");
  CrtSplit out;
  out.parent = ring;
  out.left = make_ring(ring->field, I1);
  out.right = make_ring(ring->field, I2);
  out.back.assign((size_t)(out.left->nreps * out.right->nreps), -1);
  for (long long i = 0; i < ring->nreps; ++i) {
    Element e = ring->reps[(size_t)i];
    long long i1 = out.left->reduce_index(e);
    long long i2 = out.right->reduce_index(e);
    int32_t& slot = out.back[(size_t)(i1 * out.right->nreps + i2)];
    if (slot != -1) throw InvariantError("crt_split: residue pair hit twice");
    slot = (int32_t)i;
  }
  for (int32_t v : out.back)
    if (v == -1) throw InvariantError("crt_split: residue pair never hit");
  return out;
}

std::vector<Element> coset_one_plus_pk(const ResidueRing& ring, int k) {
  IdealFactorization f = factor_ideal(ring.modulus);
  if (f.size() != 1) throw DomainError("coset_one_plus_pk: modulus is not a prime power");
  int m = f[0].exponent;
  if (k < 1 || k > m) throw DomainError("coset_one_plus_pk: k out of range");
  Ideal Pk = ideal_pow(f[0].prime, k);
  std::vector<Element> out;
  for (long long i = 0; i < ring.nreps; ++i) {
    Element z = ring.reps[(size_t)i];
    if (ideal_contains(Pk, z))
      out.push_back(ring.reduce(elem_add(ring.field, Element{1, 0}, z)));
  }
  long long expect = checked_pow(ideal_norm(f[0].prime), m - k);
  if ((long long)out.size() != expect)
    throw InvariantError("coset_one_plus_pk: filtration subgroup has wrong size");
  return out;
}

} // namespace menon
