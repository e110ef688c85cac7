#include "menon/field.hpp"

namespace menon {

static bool is_squarefree(long long v) {
  if (v < 0) v = -v;
  if (v == 0) return false;
  for (long long p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return false;
    }
  }
  return true;
}

FieldDesc make_rational_field() {
  FieldDesc K;
  K.kind = FieldKind::rational;
  K.disc = 1;
  return K;
}

FieldDesc make_quadratic_field(long long D) {
  if (D == 0 || D == 1) throw DomainError("quadratic field requires D != 0, 1");
  if (!is_squarefree(D)) throw DomainError("quadratic field requires squarefree D");
  FieldDesc K;
  K.kind = FieldKind::quadratic;
  K.D = D;
  if (floor_mod(D, 4) == 1) {
    K.disc = D;
    K.omega_sq_c = (D - 1) / 4;
    K.omega_sq_w = 1;
  } else {
    K.disc = checked_mul(4, D);
    K.omega_sq_c = D;
    K.omega_sq_w = 0;
  }
  return K;
}

Element elem_add(const FieldDesc&, Element a, Element b) {
  return Element{checked_add(a.x, b.x), checked_add(a.y, b.y)};
}

Element elem_sub(const FieldDesc&, Element a, Element b) {
  return Element{checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

Element elem_mul(const FieldDesc& K, Element a, Element b) {
  // (x1 + y1 w)(x2 + y2 w) = x1 x2 + s y1 y2 + (x1 y2 + x2 y1 + t y1 y2) w
  i128 yy = (i128)a.y * b.y;
  i128 x = (i128)a.x * b.x + (i128)K.omega_sq_c * yy;
  i128 y = (i128)a.x * b.y + (i128)a.y * b.x + (i128)K.omega_sq_w * yy;
  return Element{checked_cast(x), checked_cast(y)};
}

Element elem_conj(const FieldDesc& K, Element a) {
  // conj(omega) = t - omega
  return Element{checked_add(a.x, checked_mul(K.omega_sq_w, a.y)), checked_sub(0, a.y)};
}

long long elem_norm(const FieldDesc& K, Element a) {
  if (K.is_rational()) return a.x;
  // N(x + y w) = (x + y w)(x + ty - y w) = x^2 + t x y - s y^2
  i128 v = (i128)a.x * a.x + (i128)K.omega_sq_w * ((i128)a.x * a.y) -
           (i128)K.omega_sq_c * ((i128)a.y * a.y);
  return checked_cast(v);
}

} // namespace menon
