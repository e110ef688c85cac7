#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "menon/ideal.hpp"

namespace menon {

// Invariant-factor presentation of the unit group (O/a)^*.
struct UnitGroup {
  std::vector<Element> generators;
  std::vector<long long> orders; // d1 | d2 | ... | dk, ascending
  long long exponent = 1;        // dk, 1 for the trivial group
  long long order = 1;           // product of the d_i = number of units
  // Unique exponent vectors: for ring rep index i of a unit u,
  // dlog[i*k + j] is the exponent of generators[j] in u; -1 entries off units.
  std::vector<int32_t> dlog;
};

// The quotient O/a for a nonzero modulus a, with canonical representatives
//   {x + y*omega : 0 <= x < a, 0 <= y < c}   (HNF box; rational: {0..n-1}).
// Everything is precomputed at construction: representative table, unit mask
// (via ideal gcd with the modulus), and the unit group structure.
struct ResidueRing {
  FieldDesc field;
  Ideal modulus;
  long long box_a = 1, box_b = 0, box_c = 1;
  long long nreps = 1;
  std::vector<Element> reps;       // index i = y*box_a + x
  std::vector<char> unit_flag;     // per rep index
  std::vector<int32_t> unit_pos;   // rep index -> position in unit_list, -1 otherwise
  std::vector<int32_t> unit_list;  // unit position -> rep index, ascending
  long long phi = 0;
  long long one_index = 0;
  UnitGroup units;

  Element reduce(Element e) const;
  long long index_of(Element canonical) const { return canonical.y * box_a + canonical.x; }
  long long reduce_index(Element e) const { return index_of(reduce(e)); }
  bool is_unit_index(long long i) const { return unit_flag[(size_t)i] != 0; }
  bool is_unit(Element e) const { return is_unit_index(reduce_index(e)); }
  long long mul_index(long long i, long long j) const;
  long long add_index(long long i, long long j) const;
  long long pow_index(long long i, long long e) const; // e >= 0
};

using RingPtr = std::shared_ptr<const ResidueRing>;

// Ring-size guard: MENON_MAX_RING_NORM in the environment, else 10000.
long long default_ring_norm_cap();

RingPtr make_ring(const FieldDesc& K, const Ideal& modulus);
RingPtr make_ring(const FieldDesc& K, const Ideal& modulus, long long norm_cap);

// O/(I1*I2) = O/I1 x O/I2 for coprime I1, I2 with I1*I2 the parent modulus.
struct CrtSplit {
  RingPtr parent, left, right;
  std::vector<int32_t> back; // [i1 * right->nreps + i2] -> parent rep index

  std::pair<Element, Element> forward(Element e) const;
  Element backward(Element e1, Element e2) const;
};

CrtSplit crt_split(const RingPtr& ring, const Ideal& I1, const Ideal& I2);

// The filtration subgroup 1 + P^k of (O/P^m)^* for 1 <= k <= m, in rep-index
// order of the offsets; has exactly N(P)^(m-k) elements.
std::vector<Element> coset_one_plus_pk(const ResidueRing& ring, int k);

} // namespace menon
