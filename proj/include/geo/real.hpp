#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>

#include "geo/dyadic.hpp"

namespace geo {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};
struct NegativeRadicand : std::domain_error {
  NegativeRadicand() : std::domain_error("negative radicand") {}
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

namespace detail {
struct RealNode;
using NodePtr = std::shared_ptr<const RealNode>;
}  // namespace detail

// A constructible real: the closure of the rationals under field operations
// and square roots, as a lazy expression DAG. Values are immutable and safe
// to share across threads; sign() is exact and always decides.
//
// sign determination runs three stages: exact rational evaluation for
// radical-free expressions, adaptive dyadic interval refinement, and a
// guaranteed-terminating exact fallback in a tower of quadratic extensions.
class Real {
 public:
  Real();  // zero
  Real(long v);
  Real(const mpz_class& v);
  Real(const mpq_class& v);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  // throws DivisionByZero when sign(b) == 0
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  // throws NegativeRadicand when sign(*this) < 0
  Real sqrt() const;

  // Exact: 0 exactly when the denoted real is zero.
  int sign() const;
  Cmp compare(const Real& other) const;
  bool equals(const Real& other) const;
  bool is_zero() const { return sign() == 0; }

  // Enclosing interval with dyadic endpoints; width <= 2^(1-bits)*max(1,|x|).
  // pre: bits >= 2
  struct Interval {
    mpq_class lo, hi;
  };
  Interval approx(unsigned bits) const;

  // True when the expression contains no sqrt node.
  bool is_rational() const;
  mpq_class rational_value() const;  // pre: is_rational()

  // Exact textual form of the expression tree.
  std::string expr_string() const;
  // Shortest decimal inside the 64-bit-precision enclosure, suffixed "~"
  // when it does not denote the value exactly.
  std::string decimal_string() const;

  const detail::NodePtr& node() const { return node_; }
  explicit Real(detail::NodePtr n) : node_(std::move(n)) {}

 private:
  detail::NodePtr node_;
};

inline Real sqrt(const Real& x) { return x.sqrt(); }

inline bool operator==(const Real& a, const Real& b) { return a.equals(b); }
inline bool operator!=(const Real& a, const Real& b) { return !a.equals(b); }
inline bool operator<(const Real& a, const Real& b) {
  return a.compare(b) == Cmp::LT;
}
inline bool operator<=(const Real& a, const Real& b) {
  return a.compare(b) != Cmp::GT;
}
inline bool operator>(const Real& a, const Real& b) {
  return a.compare(b) == Cmp::GT;
}
inline bool operator>=(const Real& a, const Real& b) {
  return a.compare(b) != Cmp::LT;
}

}  // namespace geo
