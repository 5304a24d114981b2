#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "real_node.hpp"

// Exact arithmetic in a dynamically built tower Q(r_0)(r_1)...(r_{k-1}) of
// real quadratic extensions, where each r_i is the nonnegative square root
// of a strictly positive element over the previous radicals. Elements are
// dense coefficient vectors indexed by radical subsets; sign and zero tests
// recurse through the top split a0 + a1*r, which is decidable because
// r > 0 and a0^2 - a1^2*r^2 lives one level down.

namespace geo::detail {

namespace {

constexpr int kMaxLevel = 14;

struct Elem {
  int level = 0;
  std::vector<mpq_class> c;
  Elem() : c(1) {}
  explicit Elem(mpq_class q) : c(1) { c[0] = std::move(q); }
};

bool struct_zero(const Elem& e) {
  for (const auto& q : e.c)
    if (q != 0) return false;
  return true;
}

void trim(Elem& e) {
  while (e.level > 0) {
    size_t half = e.c.size() / 2;
    bool top_zero = true;
    for (size_t i = half; i < e.c.size(); ++i)
      if (e.c[i] != 0) {
        top_zero = false;
        break;
      }
    if (!top_zero) break;
    e.c.resize(half);
    --e.level;
  }
}

void lift(Elem& e, int level) {
  assert(level >= e.level);
  e.c.resize(size_t(1) << level);
  e.level = level;
}

Elem half(const Elem& e, bool top) {
  Elem r;
  r.level = e.level - 1;
  size_t h = e.c.size() / 2;
  r.c.assign(e.c.begin() + (top ? h : 0), e.c.begin() + (top ? 2 * h : h));
  return r;
}

Elem join(Elem lo, const Elem& hi, int level) {
  lift(lo, level - 1);
  Elem h2 = hi;
  lift(h2, level - 1);
  Elem r;
  r.level = level;
  r.c.resize(size_t(1) << level);
  std::copy(lo.c.begin(), lo.c.end(), r.c.begin());
  std::copy(h2.c.begin(), h2.c.end(), r.c.begin() + lo.c.size());
  trim(r);
  return r;
}

class Tower {
 public:
  int sign_of(const RealNode* root) {
    Elem e = eval(root);
    return sign(e);
  }

 private:
  std::vector<Elem> rad_;  // rad_[i]: radicand of r_i, value > 0
  std::unordered_map<const RealNode*, Elem> memo_;

  Elem add(const Elem& a, const Elem& b) {
    Elem x = a, y = b;
    int L = std::max(x.level, y.level);
    lift(x, L);
    lift(y, L);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
    trim(x);
    return x;
  }

  Elem sub(const Elem& a, const Elem& b) {
    Elem x = a, y = b;
    int L = std::max(x.level, y.level);
    lift(x, L);
    lift(y, L);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
    trim(x);
    return x;
  }

  Elem neg(const Elem& a) {
    Elem x = a;
    for (auto& q : x.c) q = -q;
    return x;
  }

  Elem scale(const Elem& a, const mpq_class& s) {
    if (s == 0) return Elem();
    Elem x = a;
    for (auto& q : x.c)
      if (q != 0) q *= s;
    return x;
  }

  Elem mul(const Elem& a, const Elem& b) {
    if (struct_zero(a) || struct_zero(b)) return Elem();
    if (a.level == 0) return scale(b, a.c[0]);
    if (b.level == 0) return scale(a, b.c[0]);
    int L = std::max(a.level, b.level);
    Elem x = a, y = b;
    lift(x, L);
    lift(y, L);
    Elem a0 = half(x, false), a1 = half(x, true);
    Elem b0 = half(y, false), b1 = half(y, true);
    Elem lo = mul(a0, b0);
    Elem cross = mul(a1, b1);
    if (!struct_zero(cross)) lo = add(lo, mul(cross, rad_[L - 1]));
    Elem hi = add(mul(a0, b1), mul(a1, b0));
    return join(lo, hi, L);
  }

  // pre: a is semantically nonzero
  Elem inverse(const Elem& a) {
    Elem x = a;
    trim(x);
    if (x.level == 0) {
      assert(x.c[0] != 0);
      return Elem(1 / x.c[0]);
    }
    int L = x.level;
    Elem a0 = half(x, false), a1 = half(x, true);
    const Elem& d = rad_[L - 1];
    Elem n = sub(mul(a0, a0), mul(mul(a1, a1), d));
    if (!is_zero(n)) {
      Elem conj = join(a0, neg(a1), L);
      return mul(conj, inverse(n));
    }
    // conjugate vanishes: a1*r = a0 exactly, so a = 2*a0
    return inverse(add(a0, a0));
  }

  bool is_zero(const Elem& a) {
    Elem x = a;
    trim(x);
    if (x.level == 0) return x.c[0] == 0;
    Elem a0 = half(x, false), a1 = half(x, true);
    if (is_zero(a1)) return is_zero(a0);
    if (is_zero(a0)) return false;  // a1*r nonzero, r > 0
    int sa = sign(a0), sb = sign(a1);
    if (sa == sb) return false;
    const Elem& d = rad_[x.level - 1];
    return is_zero(sub(mul(a0, a0), mul(mul(a1, a1), d)));
  }

  int sign(const Elem& a) {
    Elem x = a;
    trim(x);
    if (x.level == 0) return static_cast<int>(sgn(x.c[0]));
    Elem a0 = half(x, false), a1 = half(x, true);
    int sb = sign(a1);
    if (sb == 0) return sign(a0);
    int sa = sign(a0);
    if (sa == 0) return sb;  // r > 0
    if (sa == sb) return sa;
    const Elem& d = rad_[x.level - 1];
    int s2 = sign(sub(mul(a0, a0), mul(mul(a1, a1), d)));
    return s2 == 0 ? 0 : (s2 > 0 ? sa : -sa);
  }

  Elem adjoin_sqrt(const Elem& radicand) {
    Elem r = radicand;
    trim(r);
    if (is_zero(r)) return Elem();
    if (r.level == 0) {
      // rational radicand: exact root if it is a perfect square
      mpq_class q = r.c[0];
      assert(sgn(q) > 0);
      if (mpz_perfect_square_p(q.get_num_mpz_t()) &&
          mpz_perfect_square_p(q.get_den_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), q.get_den_mpz_t());
        return Elem(mpq_class(rn, rd));
      }
    }
    // reuse an existing radical with the same value
    for (size_t i = 0; i < rad_.size(); ++i) {
      const Elem& ri = rad_[i];
      if (ri.level != r.level) continue;
      if (r.level == 0 ? (ri.c[0] == r.c[0]) : is_zero(sub(ri, r)))
        return radical_elem(static_cast<int>(i));
    }
    if (static_cast<int>(rad_.size()) >= kMaxLevel)
      throw std::runtime_error("expression exceeds supported radical depth");
    rad_.push_back(r);
    return radical_elem(static_cast<int>(rad_.size()) - 1);
  }

  Elem radical_elem(int i) {
    Elem e;
    e.level = i + 1;
    e.c.assign(size_t(1) << (i + 1), mpq_class(0));
    e.c[size_t(1) << i] = 1;
    return e;
  }

  Elem eval(const RealNode* n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    Elem e;
    switch (n->op) {
      case Op::Const: e = Elem(n->cval); break;
      case Op::Add: e = add(eval(n->a.get()), eval(n->b.get())); break;
      case Op::Sub: e = sub(eval(n->a.get()), eval(n->b.get())); break;
      case Op::Mul: e = mul(eval(n->a.get()), eval(n->b.get())); break;
      case Op::Div: e = mul(eval(n->a.get()), inverse(eval(n->b.get()))); break;
      case Op::Neg: e = neg(eval(n->a.get())); break;
      case Op::Sqrt: e = adjoin_sqrt(eval(n->a.get())); break;
    }
    memo_.emplace(n, e);
    return e;
  }
};

}  // namespace

int tower_sign(const RealNode* root) {
  Tower t;
  return t.sign_of(root);
}

}  // namespace geo::detail
