#include "ghostmgf/distengine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace ghostmgf {

namespace {

// Truncated product of power series, keeping terms up to u^(len-1).
std::vector<Scalar> series_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::size_t len) {
  std::vector<Scalar> out(len);
  for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Scalar factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Scalar(f);
}

}  // namespace

std::vector<PartialFractionTerm> partial_fractions(const RatFun& r) {
  if (r.numer().degree() >= r.denom_degree()) {
    throw std::invalid_argument("partial fractions need a proper rational function (numerator degree " +
                                std::to_string(r.numer().degree()) + ", denominator degree " +
                                std::to_string(r.denom_degree()) + ")");
  }
  std::vector<PartialFractionTerm> terms;
  const auto& factors = r.denom();
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const Scalar& a = factors[fi].pole;
    const int b_max = factors[fi].multiplicity;
    const auto len = static_cast<std::size_t>(b_max);

    // r = a^B N(t) / R(t) / (a - t)^B; expand G(a - u) = a^B N(a - u) / R(a - u) in u.
    Poly shifted = r.numer().taylor_shift(a);
    std::vector<Scalar> g(len);
    for (std::size_t i = 0; i < len; ++i) {
      g[i] = shifted.coeff(static_cast<int>(i));
      if (i % 2 == 1) g[i] = -g[i];
    }
    Scalar a_pow(1);
    for (int i = 0; i < b_max; ++i) a_pow *= a;
    for (auto& x : g) x *= a_pow;

    for (std::size_t fj = 0; fj < factors.size(); ++fj) {
      if (fj == fi) continue;
      const Scalar& p = factors[fj].pole;
      // 1 / (1 - (a - u)/p) = p/(p - a) * sum (-u/(p - a))^r
      const Scalar gap = p - a;
      std::vector<Scalar> inv(len);
      Scalar term = p / gap;
      const Scalar ratio = Scalar(-1) / gap;
      for (std::size_t i = 0; i < len; ++i) {
        inv[i] = term;
        term *= ratio;
      }
      for (int rep = 0; rep < factors[fj].multiplicity; ++rep) g = series_mul(g, inv, len);
    }
    for (int b = b_max; b >= 1; --b) {
      const Scalar& c = g[static_cast<std::size_t>(b_max - b)];
      if (sgn(c) != 0) terms.push_back({a, b, c});
    }
  }
  return terms;
}

Scalar eval_partial_fractions(const std::vector<PartialFractionTerm>& terms, const Scalar& t) {
  Scalar sum(0);
  for (const auto& term : terms) {
    Scalar base = term.pole - t;
    if (sgn(base) == 0) throw PoleError("evaluation at pole " + to_string(term.pole));
    Scalar den(1);
    for (int i = 0; i < term.order; ++i) den *= base;
    sum += term.coefficient / den;
  }
  return sum;
}

Scalar DensityModel::Term::poly_coefficient() const { return weight / factorial(degree - 1); }

Scalar DensityModel::total_mass() const {
  Scalar s(0);
  for (const auto& t : terms) {
    Scalar p(1);
    for (int i = 0; i < t.degree; ++i) p *= t.rate;
    s += t.weight / p;
  }
  return s;
}

Scalar DensityModel::mean() const {
  Scalar s(0);
  for (const auto& t : terms) {
    Scalar p(1);
    for (int i = 0; i <= t.degree; ++i) p *= t.rate;
    s += t.weight * t.degree / p;
  }
  return s;
}

DensityModel density(const RatFun& r) {
  DensityModel model;
  for (auto& pf : partial_fractions(r)) model.terms.push_back({pf.pole, pf.order, pf.coefficient});
  return model;
}

namespace {

constexpr mpfr_prec_t kStartBits = 64;
constexpr mpfr_prec_t kMaxBits = 1 << 15;

BigFloat refine(const std::function<BigFloat(mpfr_prec_t)>& evaluate, double rel_tol) {
  BigFloat prev = evaluate(kStartBits);
  for (mpfr_prec_t bits = 2 * kStartBits; bits <= kMaxBits; bits *= 2) {
    BigFloat cur = evaluate(bits);
    BigFloat diff = abs(cur - prev);
    if (diff.is_zero() || diff <= abs(cur) * BigFloat(rel_tol, bits)) return cur;
    prev = std::move(cur);
  }
  throw PrecisionError("evaluation did not stabilize within " + std::to_string(kMaxBits) + " bits");
}

BigFloat density_at(const DensityModel& d, double x, mpfr_prec_t bits) {
  const BigFloat bx(x, bits);
  BigFloat sum(bits);
  for (const auto& t : d.terms) {
    BigFloat term = BigFloat(t.poly_coefficient(), bits) * pow(bx, t.degree - 1) *
                    exp(-(BigFloat(t.rate, bits) * bx));
    sum += term;
  }
  return sum;
}

BigFloat cdf_at(const DensityModel& d, double x, mpfr_prec_t bits) {
  const BigFloat bx(x, bits);
  BigFloat sum(bits);
  for (const auto& t : d.terms) {
    // integral_0^x w u^(b-1)/(b-1)! e^(-a u) du = w/a^b (1 - e^(-a x) sum_{r<b} (a x)^r / r!)
    const BigFloat ax = BigFloat(t.rate, bits) * bx;
    BigFloat partial(1L, bits);
    BigFloat power(1L, bits);
    for (int r = 1; r < t.degree; ++r) {
      power = power * ax / static_cast<long>(r);
      partial += power;
    }
    Scalar scale(1);
    for (int i = 0; i < t.degree; ++i) scale *= t.rate;
    BigFloat tail = BigFloat(1L, bits) - exp(-ax) * partial;
    sum += BigFloat(Scalar(t.weight / scale), bits) * tail;
  }
  return sum;
}

}  // namespace

BigFloat density_eval(const DensityModel& d, double x, double rel_tol) {
  if (!(x >= 0)) throw std::invalid_argument("density_eval needs x >= 0");
  if (x == 0) {
    // Only the pure exponentials survive, and their sum is often exactly zero.
    Scalar at_zero(0);
    for (const auto& t : d.terms) {
      if (t.degree == 1) at_zero += t.weight;
    }
    return BigFloat(at_zero, kStartBits);
  }
  return refine([&](mpfr_prec_t bits) { return density_at(d, x, bits); }, rel_tol);
}

BigFloat cdf_eval(const DensityModel& d, double x, double rel_tol) {
  if (!(x >= 0)) throw std::invalid_argument("cdf_eval needs x >= 0");
  return refine([&](mpfr_prec_t bits) { return cdf_at(d, x, bits); }, rel_tol);
}

std::vector<GridPoint> density_grid(const DensityModel& d, double x_max, int points, double rel_tol) {
  if (points < 2) throw std::invalid_argument("density grid needs at least 2 points");
  if (!(x_max > 0)) throw std::invalid_argument("density grid needs x_max > 0");
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = i == points - 1 ? x_max : x_max * i / (points - 1);
    grid.push_back({x, density_eval(d, x, rel_tol).to_double()});
  }
  return grid;
}

std::string grid_to_csv(const std::vector<GridPoint>& grid, const std::string& value_name) {
  std::ostringstream out;
  out << "x," << value_name << "\n";
  char buf[64];
  for (const auto& p : grid) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g\n", p.x, p.value);
    out << buf;
  }
  return out.str();
}

bool grid_log_concave(const std::vector<GridPoint>& grid, double slack) {
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double a = grid[i - 1].value, b = grid[i].value, c = grid[i + 1].value;
    if (a <= 0 || b <= 0 || c <= 0) continue;
    if (b * b < a * c * (1 - slack)) return false;
  }
  return true;
}

}  // namespace ghostmgf
