#include "geo/real.hpp"

#include <cassert>
#include <sstream>

#include "real_node.hpp"

namespace geo {

using detail::NodePtr;
using detail::Op;
using detail::RealNode;

namespace {

NodePtr const_node(mpq_class q) {
  q.canonicalize();
  return std::make_shared<RealNode>(Op::Const, std::move(q));
}

}  // namespace

namespace detail {

mpq_class rational_eval(const RealNode* n) {
  {
    std::lock_guard<std::mutex> lk(n->mu);
    if (n->rat_set) return n->rat_cache;
  }
  mpq_class v;
  switch (n->op) {
    case Op::Const: v = n->cval; break;
    case Op::Add: v = rational_eval(n->a.get()) + rational_eval(n->b.get()); break;
    case Op::Sub: v = rational_eval(n->a.get()) - rational_eval(n->b.get()); break;
    case Op::Mul: v = rational_eval(n->a.get()) * rational_eval(n->b.get()); break;
    case Op::Div: v = rational_eval(n->a.get()) / rational_eval(n->b.get()); break;
    case Op::Neg: v = -rational_eval(n->a.get()); break;
    case Op::Sqrt: assert(false && "rational_eval on radical node"); break;
  }
  std::lock_guard<std::mutex> lk(n->mu);
  if (!n->rat_set) {
    n->rat_cache = v;
    n->rat_set = true;
  }
  return n->rat_cache;
}

std::optional<DInterval> interval_eval(const RealNode* n, long prec) {
  {
    std::lock_guard<std::mutex> lk(n->mu);
    if (n->iv_prec >= prec) return n->iv_cache;
  }
  DInterval r;
  if (n->op == Op::Const) {
    r = DInterval::exact(n->cval, prec);
  } else if (n->radical_free && n->rat_set) {
    std::lock_guard<std::mutex> lk(n->mu);
    r = DInterval::exact(n->rat_cache, prec);
  } else {
    std::optional<DInterval> ia, ib;
    if (n->a) {
      ia = interval_eval(n->a.get(), prec);
      if (!ia) return std::nullopt;
    }
    if (n->b) {
      ib = interval_eval(n->b.get(), prec);
      if (!ib) return std::nullopt;
    }
    switch (n->op) {
      case Op::Add: r = iv_add(*ia, *ib, prec); break;
      case Op::Sub: r = iv_sub(*ia, *ib, prec); break;
      case Op::Mul: r = iv_mul(*ia, *ib, prec); break;
      case Op::Div:
        if (ib->contains_zero()) return std::nullopt;
        r = iv_div(*ia, *ib, prec);
        break;
      case Op::Neg: r = iv_neg(*ia); break;
      case Op::Sqrt: r = iv_sqrt(*ia, prec); break;
      case Op::Const: break;
    }
  }
  std::lock_guard<std::mutex> lk(n->mu);
  if (n->iv_prec < prec) {
    n->iv_cache = r;
    n->iv_prec = prec;
  }
  return n->iv_cache;
}

}  // namespace detail

Real::Real() : node_(const_node(mpq_class(0))) {}
Real::Real(long v) : node_(const_node(mpq_class(v))) {}
Real::Real(const mpz_class& v) : node_(const_node(mpq_class(v))) {}
Real::Real(const mpq_class& v) : node_(const_node(v)) {}

Real operator+(const Real& a, const Real& b) {
  return Real(std::make_shared<RealNode>(Op::Add, a.node(), b.node()));
}
Real operator-(const Real& a, const Real& b) {
  return Real(std::make_shared<RealNode>(Op::Sub, a.node(), b.node()));
}
Real operator*(const Real& a, const Real& b) {
  return Real(std::make_shared<RealNode>(Op::Mul, a.node(), b.node()));
}
Real operator/(const Real& a, const Real& b) {
  if (b.sign() == 0) throw DivisionByZero();
  return Real(std::make_shared<RealNode>(Op::Div, a.node(), b.node()));
}
Real Real::operator-() const {
  return Real(std::make_shared<RealNode>(Op::Neg, node_, nullptr));
}
Real Real::sqrt() const {
  if (sign() < 0) throw NegativeRadicand();
  return Real(std::make_shared<RealNode>(Op::Sqrt, node_, nullptr));
}

int Real::sign() const {
  const RealNode* n = node_.get();
  {
    std::lock_guard<std::mutex> lk(n->mu);
    if (n->sign_cache != 9) return n->sign_cache;
  }
  int s;
  if (n->radical_free) {
    s = static_cast<int>(sgn(detail::rational_eval(n)));
  } else {
    s = 9;
    for (long prec : {64L, 256L}) {
      auto iv = detail::interval_eval(n, prec);
      if (iv) {
        int d = iv->definite_sign();
        if (d != 0) {
          s = d;
          break;
        }
      }
    }
    if (s == 9) s = detail::tower_sign(n);
  }
  std::lock_guard<std::mutex> lk(n->mu);
  if (n->sign_cache == 9) n->sign_cache = s;
  return n->sign_cache;
}

Cmp Real::compare(const Real& other) const {
  int s = (*this - other).sign();
  return s < 0 ? Cmp::LT : (s == 0 ? Cmp::EQ : Cmp::GT);
}

bool Real::equals(const Real& other) const {
  return (*this - other).sign() == 0;
}

bool Real::is_rational() const { return node_->radical_free; }

mpq_class Real::rational_value() const {
  assert(is_rational());
  return detail::rational_eval(node_.get());
}

Real::Interval Real::approx(unsigned bits) const {
  if (bits < 2) bits = 2;
  mpq_class tol = mpq_class(1) / mpq_class(mpz_class(1) << (bits - 1));
  long prec = std::max<long>(64, static_cast<long>(bits) + 16);
  for (;;) {
    auto iv = detail::interval_eval(node_.get(), prec);
    if (iv) {
      mpq_class lo = iv->lo.to_mpq(), hi = iv->hi.to_mpq();
      mpq_class w = hi - lo;
      mpq_class mag(1);
      if (!iv->contains_zero()) {
        mpq_class alo = abs(lo), ahi = abs(hi);
        mpq_class m = alo < ahi ? alo : ahi;
        if (m > mag) mag = m;
      }
      if (w <= tol * mag) return {lo, hi};
    }
    prec *= 2;
  }
}

std::string Real::expr_string() const {
  std::string out;
  // iterative not needed; composite depths stay modest
  struct R {
    static void render(const RealNode* n, std::string& s) {
      switch (n->op) {
        case Op::Const: {
          if (sgn(n->cval) < 0) {
            s += "(" + n->cval.get_str() + ")";
          } else {
            s += n->cval.get_str();
          }
          break;
        }
        case Op::Add:
          s += "(";
          render(n->a.get(), s);
          s += " + ";
          render(n->b.get(), s);
          s += ")";
          break;
        case Op::Sub:
          s += "(";
          render(n->a.get(), s);
          s += " - ";
          render(n->b.get(), s);
          s += ")";
          break;
        case Op::Mul:
          s += "(";
          render(n->a.get(), s);
          s += "*";
          render(n->b.get(), s);
          s += ")";
          break;
        case Op::Div:
          s += "(";
          render(n->a.get(), s);
          s += "/";
          render(n->b.get(), s);
          s += ")";
          break;
        case Op::Neg:
          s += "(-";
          render(n->a.get(), s);
          s += ")";
          break;
        case Op::Sqrt:
          s += "sqrt(";
          render(n->a.get(), s);
          s += ")";
          break;
      }
    }
  };
  R::render(node_.get(), out);
  return out;
}

namespace {

// 10^k as mpz
mpz_class pow10z(unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

std::string decimal_text(const mpz_class& scaled, unsigned digits) {
  // scaled / 10^digits rendered without trailing zeros
  mpz_class a = abs(scaled);
  std::string ds = a.get_str();
  std::string sign = sgn(scaled) < 0 ? "-" : "";
  if (digits == 0) return sign + ds;
  while (ds.size() <= digits) ds.insert(ds.begin(), '0');
  std::string ip = ds.substr(0, ds.size() - digits);
  std::string fp = ds.substr(ds.size() - digits);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  if (fp.empty()) return sign + ip;
  return sign + ip + "." + fp;
}

}  // namespace

std::string Real::decimal_string() const {
  Interval got = approx(64);
  // The computed enclosure may be tighter than 64-bit precision requires
  // (caches, ladder overshoot); widen it back to the full 64-bit window so
  // the rendered decimal is the shortest one that window pins down.
  mpq_class tol = mpq_class(1) / mpq_class(mpz_class(1) << 63);
  {
    mpq_class mag(1);
    if (sgn(got.lo) > 0 || sgn(got.hi) < 0) {
      mpq_class alo = abs(got.lo), ahi = abs(got.hi);
      mpq_class m = alo < ahi ? alo : ahi;
      if (m > mag) mag = m;
    }
    tol *= mag;
  }
  mpq_class mid = (got.lo + got.hi) / 2;
  Interval iv{mid - tol / 2, mid + tol / 2};
  // Find the decimal with the fewest digits inside [lo, hi].
  unsigned digits = 0;
  mpq_class w = iv.hi - iv.lo;
  if (w > 0) {
    // jump near the first digit count that can possibly work
    mpq_class inv = 1 / w;
    unsigned est = 0;
    mpz_class num = inv.get_num() / inv.get_den();
    while (num >= 10 && est < 80) {
      num /= 10;
      ++est;
    }
    digits = est > 2 ? est - 2 : 0;
  }
  mpq_class chosen;
  for (;; ++digits) {
    mpz_class scale = pow10z(digits);
    mpq_class slo = iv.lo * scale, shi = iv.hi * scale;
    mpz_class nlo, nhi;
    mpz_cdiv_q(nlo.get_mpz_t(), slo.get_num_mpz_t(), slo.get_den_mpz_t());
    mpz_fdiv_q(nhi.get_mpz_t(), shi.get_num_mpz_t(), shi.get_den_mpz_t());
    if (nlo <= nhi) {
      // pick the candidate nearest the midpoint
      mpq_class mid = (slo + shi) / 2;
      mpz_class pick;
      mpz_fdiv_q(pick.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
      if (pick < nlo) pick = nlo;
      if (pick > nhi) pick = nhi;
      chosen = mpq_class(pick) / mpq_class(scale);
      chosen.canonicalize();
      std::string text = decimal_text(pick, digits);
      bool exact;
      if (is_rational()) {
        exact = rational_value() == chosen;
      } else {
        auto probe = approx(128);
        if (chosen < probe.lo || chosen > probe.hi)
          exact = false;
        else
          exact = equals(Real(chosen));
      }
      return exact ? text : text + "~";
    }
    assert(digits < 4096);
  }
}

}  // namespace geo
