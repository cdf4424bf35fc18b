#pragma once

// Exact coefficient arithmetic: multivariate integer polynomials tagged by a
// ring descriptor.  One representation serves Z, Z/n, F_p and Z[q-classes];
// non-polynomial rings simply keep every monomial at degree zero.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "phec/error.hpp"

namespace phec {

using Int = boost::multiprecision::cpp_int;

// Packed monomial: up to 8 exponents of 8 bits, variable i in byte i.
// Comparing packed values gives a multiplication-compatible total order.
using Mono = std::uint64_t;

constexpr int kMaxVars = 8;
constexpr int kMaxExp = 255;

inline int mono_get(Mono m, int i) { return int((m >> (8 * i)) & 0xff); }

inline Mono mono_make(int i, int e) {
  check(i >= 0 && i < kMaxVars && e >= 0 && e <= kMaxExp, "monomial out of range");
  return Mono(e) << (8 * i);
}

Mono mono_mul(Mono a, Mono b);
bool mono_divides(Mono a, Mono b);       // a | b
Mono mono_div(Mono b, Mono a);           // b / a, requires divisibility

enum class RingKind { Z, Zmod, GFp, PolyZ };

struct Ring {
  RingKind kind = RingKind::Z;
  Int modulus = 0;                  // Zmod / GFp
  std::vector<std::string> vars;    // PolyZ

  bool is_field() const { return kind == RingKind::GFp; }
  bool is_poly() const { return kind == RingKind::PolyZ; }
  int nvars() const { return int(vars.size()); }
  bool operator==(const Ring& o) const {
    return kind == o.kind && modulus == o.modulus && vars == o.vars;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  static Ring integers() { return Ring{}; }
  static Ring zmod(const Int& n);
  static Ring gfp(const Int& p);
  static Ring polyz(std::vector<std::string> names);
};

// Sorted by Mono ascending; no zero coefficients.  The empty Poly is zero.
struct Poly {
  std::vector<std::pair<Mono, Int>> t;

  bool is_zero() const { return t.empty(); }
  bool operator==(const Poly& o) const { return t == o.t; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const { return t < o.t; }
};

Poly poly_zero();
Poly poly_from_int(const Ring& R, const Int& v);
Poly poly_one(const Ring& R);
Poly poly_var(const Ring& R, int i, int e = 1);

Poly poly_add(const Ring& R, const Poly& a, const Poly& b);
Poly poly_sub(const Ring& R, const Poly& a, const Poly& b);
Poly poly_neg(const Ring& R, const Poly& a);
Poly poly_mul(const Ring& R, const Poly& a, const Poly& b);
Poly poly_scale(const Ring& R, const Poly& a, const Int& c);
Poly poly_pow(const Ring& R, const Poly& a, long n);

// Exact division; returns false when b does not divide a over R.
bool poly_divexact(const Ring& R, const Poly& a, const Poly& b, Poly* out);

// Units: +-1 over Z / PolyZ (constant), invertible residues over Z/n.
bool poly_is_unit(const Ring& R, const Poly& a);
// Inverse of a unit; fails otherwise.
Poly poly_unit_inverse(const Ring& R, const Poly& a);

// Substitute vals[i] for variable i; lands in dst (Z, Zmod or GFp).
Poly poly_specialize(const Ring& src, const Ring& dst, const Poly& a,
                     const std::vector<Int>& vals);

// Constant term / integer view of a degree-zero polynomial.
Int poly_const(const Poly& a);
bool poly_is_const(const Poly& a);

// Canonical text, e.g. "q^2-2*q+1", "-3", "q0*q1".  Deterministic.
std::string poly_str(const Ring& R, const Poly& a);

// Parse the poly_str format (used by the element round-trip parser).
Poly poly_parse(const Ring& R, const std::string& s);

}  // namespace phec
