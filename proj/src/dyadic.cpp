#include "geo/dyadic.hpp"

#include <algorithm>
#include <cassert>

namespace geo {

mpq_class Dyadic::to_mpq() const {
  mpq_class q(m);
  if (e >= 0) {
    mpz_class f;
    mpz_mul_2exp(f.get_mpz_t(), mpz_class(1).get_mpz_t(), e);
    q *= f;
  } else {
    mpz_class f;
    mpz_mul_2exp(f.get_mpz_t(), mpz_class(1).get_mpz_t(), -e);
    q /= f;
  }
  return q;
}

static long bitlen(const mpz_class& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

int dy_cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sgn(), sb = b.sgn();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Align to the smaller exponent and compare mantissas.
  long e = std::min(a.e, b.e);
  mpz_class ma, mb;
  mpz_mul_2exp(ma.get_mpz_t(), a.m.get_mpz_t(), a.e - e);
  mpz_mul_2exp(mb.get_mpz_t(), b.m.get_mpz_t(), b.e - e);
  return cmp(ma, mb) < 0 ? -1 : (ma == mb ? 0 : 1);
}

// Drop mantissa bits below absolute weight 2^cut with directed rounding.
static Dyadic drop_below(const Dyadic& x, long cut, bool up) {
  if (x.is_zero() || x.e >= cut) return x;
  long shift = cut - x.e;
  mpz_class q;
  if (up)
    mpz_cdiv_q_2exp(q.get_mpz_t(), x.m.get_mpz_t(), shift);
  else
    mpz_fdiv_q_2exp(q.get_mpz_t(), x.m.get_mpz_t(), shift);
  return Dyadic(q, cut);
}

Dyadic dy_round(const Dyadic& x, long prec, bool up) {
  long bl = bitlen(x.m);
  if (bl <= prec) return x;
  return drop_below(x, x.e + (bl - prec), up);
}

Dyadic dy_neg(const Dyadic& a) { return Dyadic(-a.m, a.e); }

Dyadic dy_add(const Dyadic& a, const Dyadic& b, long prec, bool up) {
  if (a.is_zero()) return dy_round(b, prec, up);
  if (b.is_zero()) return dy_round(a, prec, up);
  // Bound the alignment gap: bits far below the result's precision window
  // cannot change the rounded result by more than the directed rounding
  // already allows.
  long top = std::max(a.e + bitlen(a.m), b.e + bitlen(b.m));
  long cut = top - (prec + 4);
  Dyadic aa = drop_below(a, cut, up);
  Dyadic bb = drop_below(b, cut, up);
  long e = std::min(aa.e, bb.e);
  mpz_class ma, mb;
  mpz_mul_2exp(ma.get_mpz_t(), aa.m.get_mpz_t(), aa.e - e);
  mpz_mul_2exp(mb.get_mpz_t(), bb.m.get_mpz_t(), bb.e - e);
  return dy_round(Dyadic(ma + mb, e), prec, up);
}

Dyadic dy_sub(const Dyadic& a, const Dyadic& b, long prec, bool up) {
  return dy_add(a, dy_neg(b), prec, up);
}

Dyadic dy_mul(const Dyadic& a, const Dyadic& b, long prec, bool up) {
  return dy_round(Dyadic(a.m * b.m, a.e + b.e), prec, up);
}

Dyadic dy_div(const Dyadic& a, const Dyadic& b, long prec, bool up) {
  assert(!b.is_zero());
  if (a.is_zero()) return Dyadic(0L);
  long t = prec + 4 + std::max(0L, bitlen(b.m) - bitlen(a.m)) + 4;
  mpz_class num;
  mpz_mul_2exp(num.get_mpz_t(), a.m.get_mpz_t(), t);
  mpz_class q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.m.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.m.get_mpz_t());
  return dy_round(Dyadic(q, a.e - b.e - t), prec, up);
}

Dyadic dy_sqrt(const Dyadic& a, long prec, bool up) {
  assert(a.sgn() >= 0);
  if (a.is_zero()) return Dyadic(0L);
  // Scale so the mantissa has >= 2*prec+4 bits and the exponent is even.
  long t = std::max(0L, 2 * (prec + 2) - bitlen(a.m));
  if ((a.e - t) % 2 != 0) ++t;
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), a.m.get_mpz_t(), t);
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  long e2 = (a.e - t) / 2;
  if (up && r * r != scaled) r += 1;
  return dy_round(Dyadic(r, e2), prec, up);
}

DInterval DInterval::exact(const mpq_class& q, long prec) {
  // num / den rounded in both directions.
  Dyadic num = Dyadic::from_mpz(q.get_num());
  Dyadic den = Dyadic::from_mpz(q.get_den());
  return {dy_div(num, den, prec, false), dy_div(num, den, prec, true)};
}

DInterval iv_add(const DInterval& a, const DInterval& b, long prec) {
  return {dy_add(a.lo, b.lo, prec, false), dy_add(a.hi, b.hi, prec, true)};
}

DInterval iv_sub(const DInterval& a, const DInterval& b, long prec) {
  return {dy_sub(a.lo, b.hi, prec, false), dy_sub(a.hi, b.lo, prec, true)};
}

DInterval iv_neg(const DInterval& a) { return {dy_neg(a.hi), dy_neg(a.lo)}; }

DInterval iv_mul(const DInterval& a, const DInterval& b, long prec) {
  const Dyadic* as[2] = {&a.lo, &a.hi};
  const Dyadic* bs[2] = {&b.lo, &b.hi};
  Dyadic lo, hi;
  bool first = true;
  for (auto pa : as)
    for (auto pb : bs) {
      Dyadic down = dy_mul(*pa, *pb, prec, false);
      Dyadic upv = dy_mul(*pa, *pb, prec, true);
      if (first) {
        lo = down;
        hi = upv;
        first = false;
      } else {
        if (dy_cmp(down, lo) < 0) lo = down;
        if (dy_cmp(upv, hi) > 0) hi = upv;
      }
    }
  return {lo, hi};
}

DInterval iv_div(const DInterval& a, const DInterval& b, long prec) {
  assert(!b.contains_zero());
  const Dyadic* as[2] = {&a.lo, &a.hi};
  const Dyadic* bs[2] = {&b.lo, &b.hi};
  Dyadic lo, hi;
  bool first = true;
  for (auto pa : as)
    for (auto pb : bs) {
      Dyadic down = dy_div(*pa, *pb, prec, false);
      Dyadic upv = dy_div(*pa, *pb, prec, true);
      if (first) {
        lo = down;
        hi = upv;
        first = false;
      } else {
        if (dy_cmp(down, lo) < 0) lo = down;
        if (dy_cmp(upv, hi) > 0) hi = upv;
      }
    }
  return {lo, hi};
}

DInterval iv_sqrt(const DInterval& a, long prec) {
  Dyadic lo = a.lo.sgn() < 0 ? Dyadic(0L) : dy_sqrt(a.lo, prec, false);
  assert(a.hi.sgn() >= 0);
  Dyadic hi = dy_sqrt(a.hi, prec, true);
  return {lo, hi};
}

}  // namespace geo
