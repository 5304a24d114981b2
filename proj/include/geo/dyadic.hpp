#pragma once

#include <gmpxx.h>

namespace geo {

// A dyadic rational m * 2^e. The mantissa is arbitrary precision; rounding
// to a working precision happens explicitly through the directed operations
// below, never implicitly.
struct Dyadic {
  mpz_class m{0};
  long e{0};

  Dyadic() = default;
  Dyadic(mpz_class mm, long ee) : m(std::move(mm)), e(ee) {}
  explicit Dyadic(long v) : m(v), e(0) {}

  bool is_zero() const { return m == 0; }
  int sgn() const { return ::sgn(m); }
  mpq_class to_mpq() const;

  static Dyadic from_mpz(const mpz_class& z) { return Dyadic(z, 0); }
};

int dy_cmp(const Dyadic& a, const Dyadic& b);

// Directed rounding to at most `prec` mantissa bits. `up` selects the
// rounding direction on the real line (towards +inf / -inf).
Dyadic dy_round(const Dyadic& x, long prec, bool up);

Dyadic dy_add(const Dyadic& a, const Dyadic& b, long prec, bool up);
Dyadic dy_sub(const Dyadic& a, const Dyadic& b, long prec, bool up);
Dyadic dy_mul(const Dyadic& a, const Dyadic& b, long prec, bool up);
Dyadic dy_div(const Dyadic& a, const Dyadic& b, long prec, bool up);
Dyadic dy_sqrt(const Dyadic& a, long prec, bool up);  // pre: a >= 0
Dyadic dy_neg(const Dyadic& a);

// Closed interval [lo, hi] with dyadic endpoints; every operation rounds
// outward so the enclosure property is preserved.
struct DInterval {
  Dyadic lo, hi;

  bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
  // Sign of every point of the interval, or 0 when it straddles zero.
  int definite_sign() const {
    if (lo.sgn() > 0) return 1;
    if (hi.sgn() < 0) return -1;
    return 0;
  }
  mpq_class width() const { return hi.to_mpq() - lo.to_mpq(); }

  static DInterval exact(const mpq_class& q, long prec);
  static DInterval point(const Dyadic& d) { return {d, d}; }
};

DInterval iv_add(const DInterval& a, const DInterval& b, long prec);
DInterval iv_sub(const DInterval& a, const DInterval& b, long prec);
DInterval iv_neg(const DInterval& a);
DInterval iv_mul(const DInterval& a, const DInterval& b, long prec);
// pre: b excludes zero
DInterval iv_div(const DInterval& a, const DInterval& b, long prec);
// Enclosure of sqrt for a value known to be >= 0; negative slack in `a.lo`
// caused by outward rounding is clamped away.
DInterval iv_sqrt(const DInterval& a, long prec);

}  // namespace geo
