#pragma once

#include "menon/checked.hpp"
#include "menon/errors.hpp"

namespace menon {

enum class FieldKind { rational, quadratic };

// Base field of the computation: Q itself, or Q(sqrt D) for a squarefree
// integer D != 0, 1.  Elements of the ring of integers are written over the
// basis {1, omega} with
//     omega = (1 + sqrt D)/2   if D = 1 (mod 4),
//     omega = sqrt D           otherwise,
// so omega satisfies omega^2 = omega_sq_c + omega_sq_w * omega.  The field
// discriminant is D in the first case and 4D in the second.
struct FieldDesc {
  FieldKind kind = FieldKind::rational;
  long long D = 0;
  long long disc = 1;
  long long omega_sq_c = 0;
  long long omega_sq_w = 0;

  bool is_rational() const { return kind == FieldKind::rational; }
  bool operator==(const FieldDesc&) const = default;
};

FieldDesc make_rational_field();
FieldDesc make_quadratic_field(long long D);

// x + y*omega.  For the rational field y is always 0.
struct Element {
  long long x = 0;
  long long y = 0;
  bool operator==(const Element&) const = default;
};

inline bool elem_is_zero(Element e) { return e.x == 0 && e.y == 0; }

Element elem_add(const FieldDesc& K, Element a, Element b);
Element elem_sub(const FieldDesc& K, Element a, Element b);
Element elem_mul(const FieldDesc& K, Element a, Element b);
Element elem_conj(const FieldDesc& K, Element a);

// Field norm of the element: x for the rational field, x^2 + txy - sy^2 for a
// quadratic field (may be negative when D > 0).
long long elem_norm(const FieldDesc& K, Element a);

} // namespace menon
