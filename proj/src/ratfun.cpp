#include "ghostmgf/ratfun.hpp"

#include <algorithm>

namespace ghostmgf {

std::vector<LinFactor> merge_factors(std::vector<LinFactor> factors) {
  for (const auto& f : factors) {
    if (sgn(f.pole) == 0) throw std::invalid_argument("linear factor with pole at 0");
    if (f.multiplicity <= 0) throw std::invalid_argument("linear factor with nonpositive multiplicity");
  }
  std::sort(factors.begin(), factors.end(), [](const LinFactor& a, const LinFactor& b) { return a.pole < b.pole; });
  std::vector<LinFactor> out;
  for (auto& f : factors) {
    if (!out.empty() && out.back().pole == f.pole) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<LinFactor> factor_union(const std::vector<LinFactor>& a, const std::vector<LinFactor>& b) {
  std::vector<LinFactor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].pole < b[j].pole)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].pole < a[i].pole) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].pole, std::max(a[i].multiplicity, b[j].multiplicity)});
      ++i;
      ++j;
    }
  }
  return out;
}

RatFun::RatFun(Poly numer, std::vector<LinFactor> denom)
    : numer_(std::move(numer)), denom_(merge_factors(std::move(denom))) {}

RatFun RatFun::constant(const Scalar& c) { return RatFun(Poly::constant(c)); }

int RatFun::denom_degree() const {
  int d = 0;
  for (const auto& f : denom_) d += f.multiplicity;
  return d;
}

Poly RatFun::denom_poly() const {
  Poly q = Poly::constant(1);
  for (const auto& f : denom_) q.mul_linear_factor(f.pole, f.multiplicity);
  return q;
}

int RatFun::multiplicity_of(const Scalar& pole) const {
  for (const auto& f : denom_) {
    if (f.pole == pole) return f.multiplicity;
  }
  return 0;
}

Scalar RatFun::eval(const Scalar& t) const {
  Scalar den(1);
  for (const auto& f : denom_) {
    Scalar factor = 1 - t / f.pole;
    if (sgn(factor) == 0) throw PoleError("evaluation at pole " + to_string(f.pole));
    for (int r = 0; r < f.multiplicity; ++r) den *= factor;
  }
  return numer_.eval(t) / den;
}

BigComplex RatFun::eval(const BigComplex& z, mpfr_prec_t bits) const {
  const BigComplex x = z.with_precision(bits);
  BigComplex num(bits);
  const auto& c = numer_.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    num *= x;
    num.re += BigFloat(*it, bits);
  }
  BigComplex den(1.0, 0.0, bits);
  for (const auto& f : denom_) {
    // 1 - z/p
    BigFloat inv(Scalar(1 / f.pole), bits);
    BigComplex factor(BigFloat(1L, bits) - x.re * inv, -(x.im * inv));
    if (factor.is_zero()) throw PoleError("evaluation at pole " + to_string(f.pole));
    for (int r = 0; r < f.multiplicity; ++r) den *= factor;
  }
  return num / den;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  RatFun out;
  out.denom_ = factor_union(a.denom_, b.denom_);
  auto lift = [&out](const RatFun& r) {
    Poly p = r.numer_;
    std::size_t j = 0;
    for (const auto& f : out.denom_) {
      int have = 0;
      while (j < r.denom_.size() && r.denom_[j].pole < f.pole) ++j;
      if (j < r.denom_.size() && r.denom_[j].pole == f.pole) have = r.denom_[j].multiplicity;
      if (f.multiplicity > have) p.mul_linear_factor(f.pole, f.multiplicity - have);
    }
    return p;
  };
  out.numer_ = lift(a) + lift(b);
  return out;
}

RatFun operator*(RatFun a, const Scalar& c) {
  a.numer_ *= c;
  return a;
}

RatFun RatFun::times_t() const {
  RatFun out(*this);
  out.numer_ = numer_.shifted(1);
  return out;
}

RatFun RatFun::over_linear_factor(const Scalar& pole) const {
  auto factors = denom_;
  factors.push_back({pole, 1});
  return RatFun(numer_, std::move(factors));
}

Poly RatFun::display_numerator() const {
  Poly p = numer_;
  for (const auto& f : denom_) {
    mpz_class a = abs(f.pole.get_num());
    Scalar scale(1);
    for (int r = 0; r < f.multiplicity; ++r) scale *= Scalar(a);
    p *= scale;
  }
  return p;
}

NormalizeResult normalize(const RatFun& r) {
  NormalizeResult res;
  if (r.is_zero()) {
    res.value = RatFun();
    return res;
  }
  Poly numer = r.numer();
  std::vector<LinFactor> kept;
  for (const auto& f : r.denom()) {
    int mult = f.multiplicity;
    int removed = 0;
    while (mult > 0) {
      auto q = numer.divide_by_linear_factor(f.pole);
      if (!q) break;
      numer = std::move(*q);
      --mult;
      ++removed;
    }
    if (removed > 0) res.cancellations.push_back({f.pole, removed});
    if (mult > 0) kept.push_back({f.pole, mult});
  }
  res.value = RatFun(std::move(numer), std::move(kept));
  return res;
}

std::vector<Scalar> taylor_coeffs(const RatFun& r, int order) {
  if (order < 0) throw std::invalid_argument("taylor order must be nonnegative");
  const Poly den = r.denom_poly();  // den(0) == 1
  const auto& d = den.coeffs();
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    Scalar acc = r.numer().coeff(i);
    const int jmax = std::min(i, den.degree());
    for (int j = 1; j <= jmax; ++j) acc -= d[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    c[static_cast<std::size_t>(i)] = acc;
  }
  return c;
}

}  // namespace ghostmgf
