#pragma once

// deterministic random constructible-expression generator (test-side)

#include "geo/real.hpp"

namespace testgen {

struct ExprGen {
  std::uint64_t state;
  explicit ExprGen(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % (hi - lo + 1));
  }

  geo::Real leaf() {
    mpq_class q(pick(-20, 20), pick(1, 9));
    q.canonicalize();
    return geo::Real(q);
  }

  geo::Real gen(int depth, int* sqrt_budget) {
    if (depth <= 0) return leaf();
    switch (pick(0, 6)) {
      case 0: return gen(depth - 1, sqrt_budget) + gen(depth - 1, sqrt_budget);
      case 1: return gen(depth - 1, sqrt_budget) - gen(depth - 1, sqrt_budget);
      case 2: return gen(depth - 1, sqrt_budget) * gen(depth - 1, sqrt_budget);
      case 3: {
        geo::Real num = gen(depth - 1, sqrt_budget);
        geo::Real den = gen(depth - 1, sqrt_budget);
        if (den.sign() == 0) den = den + geo::Real(1);
        if (den.sign() == 0) return num;
        return num / den;
      }
      case 4: return -gen(depth - 1, sqrt_budget);
      case 5: {
        if (*sqrt_budget <= 0) return leaf();
        --*sqrt_budget;
        geo::Real x = gen(depth - 1, sqrt_budget);
        if (x.sign() < 0) x = -x;
        return x.sqrt();
      }
      default: return leaf();
    }
  }

  geo::Real gen_expr(int depth = 5, int sqrt_budget = 5) {
    int budget = sqrt_budget;
    return gen(depth, &budget);
  }
};

}  // namespace testgen
