#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <optional>

#include "geo/dyadic.hpp"
#include "geo/real.hpp"

namespace geo::detail {

enum class Op : unsigned char { Const, Add, Sub, Mul, Div, Neg, Sqrt };

struct RealNode {
  Op op;
  mpq_class cval;  // Const only
  NodePtr a, b;
  bool radical_free;

  // write-once / monotone caches, guarded by mu
  mutable std::mutex mu;
  mutable int sign_cache = 9;  // 9 = not yet computed
  mutable bool rat_set = false;
  mutable mpq_class rat_cache;
  mutable long iv_prec = 0;  // 0 = no interval cached
  mutable DInterval iv_cache;

  RealNode(Op o, mpq_class v) : op(o), cval(std::move(v)), radical_free(true) {}
  RealNode(Op o, NodePtr x, NodePtr y)
      : op(o), a(std::move(x)), b(std::move(y)) {
    radical_free = op != Op::Sqrt && (!a || a->radical_free) &&
                   (!b || b->radical_free);
  }
};

// Exact sign decision in a dynamically built tower of quadratic extensions;
// terminates for every well-formed node. Defined in tower.cpp.
int tower_sign(const RealNode* root);

// Interval evaluation at the given working precision. Returns nullopt when a
// divisor interval still straddles zero at this precision.
std::optional<DInterval> interval_eval(const RealNode* n, long prec);

// Exact evaluation of a radical-free node.
mpq_class rational_eval(const RealNode* n);

}  // namespace geo::detail
