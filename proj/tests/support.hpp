#pragma once

#include <tuple>
#include <vector>

#include "ghostmgf/ghostrec.hpp"
#include "ghostmgf/ratfun.hpp"

namespace testing {

using ghostmgf::LinFactor;
using ghostmgf::Poly;
using ghostmgf::RatFun;
using ghostmgf::Scalar;

inline Scalar q(long num, long den = 1) { return ghostmgf::make_scalar(num, den); }

inline Poly poly(std::initializer_list<long> coeffs) {
  std::vector<Scalar> c;
  for (long x : coeffs) c.emplace_back(x);
  return Poly(c);
}

/// One factor (a - b t)^mult of a printed formula.
struct Display {
  long a;
  long b;
  int mult;
};

/// Builds c * numer(t) / prod (a - b t)^mult in canonical (1 - t/p) form.
inline RatFun from_display(const Scalar& c, std::initializer_list<long> numer, std::initializer_list<Display> factors) {
  Poly p = poly(numer) * c;
  std::vector<LinFactor> denom;
  for (const auto& f : factors) {
    Scalar scale = 1;
    for (int i = 0; i < f.mult; ++i) scale *= f.a;
    p *= Scalar(1 / scale);
    denom.push_back({q(f.a, f.b), f.mult});
  }
  return RatFun(p, denom);
}

inline ghostmgf::ProblemSpec spec(int k, const Scalar& m, const Scalar& n) { return ghostmgf::make_spec(k, m, n); }

}  // namespace testing
