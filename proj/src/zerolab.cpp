#include "ghostmgf/zerolab.hpp"

#include <algorithm>
#include <cmath>

namespace ghostmgf {

namespace {

struct Horner {
  BigComplex value;
  BigComplex derivative;
};

Horner eval_with_derivative(const std::vector<BigFloat>& c, const BigComplex& z) {
  const mpfr_prec_t bits = z.precision();
  BigComplex p(bits), dp(bits);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z;
    p.re += *it;
  }
  return {std::move(p), std::move(dp)};
}

BigComplex eval_poly(const std::vector<BigFloat>& c, const BigComplex& z) {
  BigComplex p(z.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    p = p * z;
    p.re += *it;
  }
  return p;
}

// sum_j |c_j| |z|^j, the scale of rounding errors in evaluating p(z).
BigFloat eval_magnitude(const std::vector<BigFloat>& c, const BigFloat& modulus) {
  BigFloat acc(modulus.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * modulus + abs(*it);
  return acc;
}

std::vector<BigFloat> convert(const Poly& p, mpfr_prec_t bits) {
  std::vector<BigFloat> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c, bits);
  return out;
}

// Aberth correction for root i against the current iterates.
BigComplex aberth_correction(const std::vector<BigFloat>& c, const std::vector<BigComplex>& z, std::size_t i) {
  const mpfr_prec_t bits = z[i].precision();
  Horner h = eval_with_derivative(c, z[i]);
  if (h.value.is_zero()) return BigComplex(bits);
  BigComplex ratio = h.value / h.derivative;
  BigComplex sum(bits);
  const BigComplex one(1.0, 0.0, bits);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == i) continue;
    sum += one / (z[i] - z[j]);
  }
  return ratio / (one - ratio * sum);
}

// Upper bound 2 max |c_{n-i}/c_n|^(1/i) on the root moduli (Fujiwara).
BigFloat root_bound(const std::vector<BigFloat>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  const mpfr_prec_t bits = c.back().precision();
  BigFloat best(bits);
  for (int i = 1; i <= n; ++i) {
    BigFloat ratio = abs(c[static_cast<std::size_t>(n - i)] / c.back());
    if (ratio.is_zero()) continue;
    if (i == n) ratio /= 2L;
    BigFloat r(bits);
    mpfr_rootn_ui(r.get(), ratio.get(), static_cast<unsigned long>(i), MPFR_RNDU);
    if (r > best) best = r;
  }
  return best * 2L;
}

}  // namespace

namespace {

struct AberthOutcome {
  bool converged = false;
  std::vector<double> residuals;
  int iterations = 0;
};

// Gauss-Seidel Aberth sweeps on z (modified in place) at the precision of c.
AberthOutcome aberth_iterate(const std::vector<BigFloat>& c, std::vector<BigComplex>& z, mpfr_prec_t target_bits,
                             int max_iter) {
  const mpfr_prec_t work = c.front().precision();
  const BigFloat tol = BigFloat::two_pow(-static_cast<long>(target_bits) + 8, work);
  const BigFloat noise = BigFloat::two_pow(-static_cast<long>(work) + 8, work);
  const std::size_t n = z.size();
  AberthOutcome out;
  out.residuals.assign(n, 1.0);
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int iter = 0; iter < max_iter && remaining > 0; ++iter) {
    out.iterations = iter + 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      BigComplex w = aberth_correction(c, z, i);
      z[i] -= w;
      const BigFloat mod = z[i].abs();
      const BigFloat step = w.abs();
      out.residuals[i] = mod.is_zero() ? step.to_double() : (step / mod).to_double();
      bool converged = step <= tol * mod;
      if (!converged) {
        // z is an exact root of a polynomial within rounding distance of p at this precision.
        BigComplex pv = eval_poly(c, z[i]);
        converged = pv.abs() <= eval_magnitude(c, mod) * noise;
      }
      if (converged) {
        done[i] = true;
        --remaining;
      }
    }
  }
  out.converged = remaining == 0;
  return out;
}

// Relative Vieta residual (sum against the sum of moduli, product against its exact value)
// together with conjugate closure, judged at the target precision.
bool roots_consistent(const Poly& p, const std::vector<BigComplex>& z, mpfr_prec_t target_bits) {
  const mpfr_prec_t work = z.front().precision();
  const int n = p.degree();
  const Scalar& lead = p.coeffs().back();
  BigComplex sum(work), prod(1.0, 0.0, work);
  BigFloat moduli(work);
  for (const auto& x : z) {
    sum += x;
    prod *= x;
    moduli += x.abs();
  }
  const BigFloat want_sum(Scalar(-p.coeff(n - 1) / lead), work);
  Scalar p0 = p.coeff(0) / lead;
  if (n % 2 == 1) p0 = -p0;
  const BigFloat want_prod(p0, work);
  const BigFloat tol = BigFloat::two_pow(-static_cast<long>(target_bits) / 2, work);
  BigComplex dsum = sum - BigComplex(want_sum, BigFloat(work));
  if (dsum.abs() > tol * moduli) return false;
  BigComplex dprod = prod - BigComplex(want_prod, BigFloat(work));
  if (dprod.abs() > tol * abs(want_prod)) return false;
  // Real coefficients: the conjugate of every iterate must be close to some iterate.
  for (const auto& x : z) {
    const BigFloat scale = x.abs();
    bool found = false;
    for (const auto& y : z) {
      if ((x.conj() - y).abs() <= tol * scale) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

RootResult polynomial_roots_detailed(const Poly& poly, mpfr_prec_t bits) {
  if (poly.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  RootResult result;
  result.working_bits = bits;
  // Strip exact roots at the origin.
  std::size_t zero_roots = 0;
  while (sgn(poly.coeffs()[zero_roots]) == 0) ++zero_roots;
  Poly reduced(std::vector<Scalar>(poly.coeffs().begin() + static_cast<long>(zero_roots), poly.coeffs().end()));
  for (std::size_t i = 0; i < zero_roots; ++i) result.roots.emplace_back(bits);
  const int n = reduced.degree();
  if (n == 0) return result;

  std::vector<BigComplex> z;
  if (n == 1) {
    const auto c = convert(reduced, 2 * bits);
    z.emplace_back(-(c[0] / c[1]), BigFloat(2 * bits));
  } else {
    // The monomial basis can cancel catastrophically near clustered roots, so the
    // working precision grows until the iterates pass the Vieta and closure checks.
    mpfr_prec_t work = bits;
    const mpfr_prec_t max_work = 16 * bits;
    {
      const auto c = convert(reduced, work);
      const BigFloat radius = root_bound(c);
      const BigFloat two_pi = BigFloat::pi(work) * 2L;
      for (int i = 0; i < n; ++i) {
        BigFloat theta = two_pi * static_cast<long>(i) / static_cast<long>(n) + BigFloat(0.4, work);
        z.push_back(polar(radius, theta));
      }
    }
    const int max_iter = 500 + 20 * n;
    for (;;) {
      const auto c = convert(reduced, work);
      for (auto& x : z) x = x.with_precision(work);
      AberthOutcome outcome = aberth_iterate(c, z, bits, max_iter);
      result.iterations += outcome.iterations;
      if (outcome.converged) {
        // Polish: one simultaneous step at doubled precision.
        const auto c2 = convert(reduced, 2 * work);
        std::vector<BigComplex> z2;
        z2.reserve(z.size());
        for (const auto& x : z) z2.push_back(x.with_precision(2 * work));
        std::vector<BigComplex> polished;
        polished.reserve(z2.size());
        for (std::size_t i = 0; i < z2.size(); ++i) polished.push_back(z2[i] - aberth_correction(c2, z2, i));
        if (roots_consistent(reduced, polished, bits)) {
          z = std::move(polished);
          result.working_bits = work;
          break;
        }
      }
      if (2 * work > max_work) {
        throw RootFindingError("Aberth iteration did not reach " + std::to_string(bits) + "-bit accuracy for degree " +
                                   std::to_string(n) + " within " + std::to_string(max_work) + " working bits",
                               outcome.residuals);
      }
      work *= 2;
    }
  }
  for (auto& x : z) result.roots.push_back(x.with_precision(bits));
  std::sort(result.roots.begin(), result.roots.end(), [](const BigComplex& a, const BigComplex& b) {
    if (!(a.re == b.re)) return a.re < b.re;
    return a.im < b.im;
  });
  return result;
}

std::vector<BigComplex> polynomial_roots(const Poly& poly, mpfr_prec_t bits) {
  return polynomial_roots_detailed(poly, bits).roots;
}

std::vector<BigComplex> find_zeros(const RatFun& r, mpfr_prec_t bits) {
  if (r.numer().degree() < 1) return {};
  return polynomial_roots(r.numer(), bits);
}

namespace {

constexpr double kHalfPi = 1.5707963267948966;

BigFloat arg_step(const BigComplex& from, const BigComplex& to) {
  // Principal argument of to / from.
  BigComplex q = to * from.conj();
  return q.arg();
}

}  // namespace

int winding_count(const Poly& p, const Scalar& radius, mpfr_prec_t bits) {
  if (p.is_zero()) throw WindingError("winding number of the zero polynomial");
  const BigFloat two_pi = BigFloat::pi(bits) * 2L;
  constexpr int initial = 1024;
  constexpr int max_depth = 48;
  const BigFloat threshold(kHalfPi, bits);
  const long degree = p.degree();

  // Coefficients at increasing precision; an evaluation is accepted once the
  // Horner rounding bound is far below the computed value.
  std::vector<std::vector<BigFloat>> ladder;
  std::vector<BigFloat> magnitude;
  auto level = [&](std::size_t i) -> const std::vector<BigFloat>& {
    while (ladder.size() <= i) {
      const mpfr_prec_t w = bits << ladder.size();
      ladder.push_back(convert(p, w));
      magnitude.push_back(eval_magnitude(ladder.back(), BigFloat(radius, w)));
    }
    return ladder[i];
  };
  constexpr std::size_t max_levels = 6;

  struct Sample {
    BigFloat theta;
    BigComplex value;
    BigFloat log_step;  // |p'/p| * radius: argument change per radian of theta, to first order
  };
  auto sample_at = [&](const BigFloat& theta) {
    for (std::size_t i = 0; i < max_levels; ++i) {
      const auto& c = level(i);
      const mpfr_prec_t w = c.front().precision();
      const BigFloat rw(radius, w);
      Horner h = eval_with_derivative(c, polar(rw, theta.with_precision(w)));
      BigFloat bound = magnitude[i] * BigFloat::two_pow(-static_cast<long>(w) + 6, w) * (4 * degree + 4);
      const BigFloat mod = h.value.abs();
      if (mod > bound * 1024L) {
        BigFloat rate = h.derivative.abs() / mod * rw;
        return Sample{theta, h.value.with_precision(bits), rate.with_precision(bits)};
      }
    }
    throw WindingError("polynomial value on the circle is below the rounding level at " +
                       std::to_string(bits << (max_levels - 1)) + " bits");
  };

  struct Segment {
    Sample a, b;
    int depth;
  };
  BigFloat total(bits);
  const Sample first = sample_at(BigFloat(bits));
  Sample prev = first;
  for (int s = 1; s <= initial; ++s) {
    Sample cur = s == initial ? Sample{two_pi, first.value, first.log_step}
                              : sample_at(two_pi * static_cast<long>(s) / static_cast<long>(initial));
    std::vector<Segment> stack;
    stack.push_back({prev, cur, 0});
    while (!stack.empty()) {
      Segment seg = std::move(stack.back());
      stack.pop_back();
      const BigFloat width = seg.b.theta - seg.a.theta;
      const BigFloat delta = arg_step(seg.a.value, seg.b.value);
      // Accept when the sampled argument step is small and the local log-derivative
      // says the argument cannot wrap between the endpoints.
      const bool smooth = seg.a.log_step * width < threshold && seg.b.log_step * width < threshold;
      if (abs(delta) < threshold && smooth) {
        total += delta;
        continue;
      }
      if (seg.depth >= max_depth) throw WindingError("argument tracking did not resolve near the circle");
      Sample mid = sample_at((seg.a.theta + seg.b.theta) / 2L);
      // Push the right half first so the left half is processed next.
      stack.push_back({mid, seg.b, seg.depth + 1});
      stack.push_back({seg.a, std::move(mid), seg.depth + 1});
    }
    prev = std::move(cur);
  }
  const double turns = (total / two_pi).to_double();
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.25) {
    throw WindingError("non-integer winding total " + std::to_string(turns));
  }
  return static_cast<int>(rounded);
}

bool is_real_zero(const BigComplex& z, mpfr_prec_t bits) {
  BigFloat scale = z.abs();
  if (scale < BigFloat(1L, bits)) scale = BigFloat(1L, bits);
  return abs(z.im) <= scale * BigFloat::two_pow(-static_cast<long>(bits) / 2, bits);
}

ZeroReport analyze_zeros(const ProblemSpec& spec, const RatFun& f, mpfr_prec_t bits) {
  ZeroReport rep;
  rep.spec = spec;
  rep.precision_bits = bits;
  rep.poles = f.denom();
  rep.disk_radius = spec.m * spec.n / spec.k;
  if (f.numer().degree() >= 1) {
    auto roots = polynomial_roots_detailed(f.numer(), bits);
    rep.zeros = std::move(roots.roots);
    rep.working_bits = roots.working_bits;
  }

  const BigFloat radius(rep.disk_radius, bits);
  const BigFloat inner = radius * BigFloat(1.0 - 1e-9, bits);
  rep.min_zero_modulus = BigFloat::infinity(bits);
  rep.min_real_part = BigFloat::infinity(bits);
  for (const auto& z : rep.zeros) {
    BigFloat mod = z.abs();
    if (mod < rep.min_zero_modulus) rep.min_zero_modulus = mod;
    if (z.re < rep.min_real_part) rep.min_real_part = z.re;
    if (mod < inner) ++rep.zeros_inside;
    if (is_real_zero(z, bits)) {
      ++rep.real_zeros;
    } else if (z.im.sign() > 0) {
      ++rep.conjugate_pairs;
    }
  }

  // Conjugate closure: every non-real zero has a partner within the realness tolerance.
  rep.conjugate_closed = true;
  std::vector<bool> used(rep.zeros.size(), false);
  const BigFloat pair_tol = BigFloat::two_pow(-static_cast<long>(bits) / 2, bits);
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
    if (used[i] || is_real_zero(rep.zeros[i], bits)) continue;
    bool found = false;
    for (std::size_t j = 0; j < rep.zeros.size() && !found; ++j) {
      if (j == i || used[j]) continue;
      BigComplex diff = rep.zeros[i].conj() - rep.zeros[j];
      BigFloat scale = rep.zeros[i].abs();
      if (diff.abs() <= pair_tol * scale) {
        used[i] = used[j] = true;
        found = true;
      }
    }
    if (!found) rep.conjugate_closed = false;
  }

  // Vieta: sum = -c_{n-1}/c_n, product = (-1)^n c_0/c_n.
  const int deg = f.numer().degree();
  if (deg >= 1) {
    const Scalar& lead = f.numer().coeffs().back();
    BigComplex sum(bits), prod(1.0, 0.0, bits);
    for (const auto& z : rep.zeros) {
      sum += z;
      prod *= z;
    }
    BigFloat expect_sum(Scalar(-f.numer().coeff(deg - 1) / lead), bits);
    Scalar p0 = f.numer().coeff(0) / lead;
    if (deg % 2 == 1) p0 = -p0;
    BigFloat expect_prod(p0, bits);
    auto rel = [bits](const BigComplex& got, const BigFloat& want) {
      BigComplex d = got - BigComplex(want, BigFloat(bits));
      BigFloat scale = abs(want);
      if (scale.is_zero()) return d.abs().to_double();
      return (d.abs() / scale).to_double();
    };
    BigFloat scale_sum(bits);
    for (const auto& z : rep.zeros) scale_sum += z.abs();
    // The sum can cancel; measure it against the sum of moduli.
    BigComplex dsum = sum - BigComplex(expect_sum, BigFloat(bits));
    const double sum_err = (dsum.abs() / scale_sum).to_double();
    rep.vieta_residual = std::max(sum_err, rel(prod, expect_prod));
  }

  rep.winding = deg >= 1 ? winding_count(f.numer(), rep.disk_radius, bits) : 0;
  rep.zero_free = rep.winding == 0 && rep.min_zero_modulus > inner;
  return rep;
}

ZeroReport zero_free_disk(const ProblemSpec& spec, mpfr_prec_t bits) { return analyze_zeros(spec, mgf(spec), bits); }

namespace {

std::vector<Scalar> grid_poles(const ProblemSpec& spec, int k) {
  std::vector<Scalar> poles;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; i + j < k; ++j) poles.push_back((spec.m - i) * (spec.n - j) / (k - i - j));
  }
  return poles;
}

}  // namespace

RatFun janson(const ProblemSpec& spec) {
  spec.validate();
  if (spec.k < 1) throw std::invalid_argument("janson needs k >= 1");
  Poly numer = Poly::constant(1);
  for (const auto& p : grid_poles(spec, spec.k - 1)) numer.mul_linear_factor(p);
  return RatFun(std::move(numer), default_denominator(spec));
}

Poly numerator_over(const RatFun& r, const Poly& q) {
  auto quotient = q.divide_exact(r.denom_poly());
  if (!quotient) throw std::invalid_argument("denominator does not divide the common denominator");
  return r.numer() * *quotient;
}

JansonComparison janson_compare(const ProblemSpec& spec) {
  spec.validate();
  JansonComparison out;
  Poly common = Poly::constant(1);
  for (const auto& p : grid_poles(spec, spec.k)) common.mul_linear_factor(p);
  Poly j_display = Poly::constant(1);
  Scalar scale(1);
  for (int i = 0; i + 1 < spec.k; ++i) {
    for (int j = 0; i + j + 1 < spec.k; ++j) {
      Scalar c0 = (spec.m - i) * (spec.n - j);
      scale *= c0;
      j_display = j_display * Poly(std::vector<Scalar>{c0, Scalar(-(spec.k - 1 - i - j))});
    }
  }
  const RatFun f = mgf(spec);
  const RatFun jf = janson(spec);
  out.f_numerator = numerator_over(f, common) * scale;
  out.j_numerator = numerator_over(jf, common) * scale;
  out.difference = out.j_numerator - out.f_numerator;
  out.equal = normalize(f).value == normalize(jf).value;
  if (!(out.j_numerator == j_display)) throw std::logic_error("janson numerator mismatch");
  return out;
}

K3Certificate zero_free_k3_certificate(const Scalar& m, const Scalar& n) {
  if (m < 3 || n < 3) throw SpecError("k = 3 certificate needs m, n >= 3");
  K3Certificate cert;
  const Scalar mn = m * n;
  cert.radius = mn / 3;
  const Scalar& R = cert.radius;
  cert.janson_at_radius = (mn - 2 * R) * ((m - 1) * n - R) * (m * (n - 1) - R);
  cert.r_squared = R * R;
  cert.three_r_squared = 3 * R * R;
  cert.janson_zeros = {mn / 2, (m - 1) * n, m * (n - 1)};
  const bool zeros_outside =
      std::all_of(cert.janson_zeros.begin(), cert.janson_zeros.end(), [&](const Scalar& z) { return z > R; });
  const auto cmp = janson_compare(make_spec(3, m, n));
  cert.difference_is_t_squared = cmp.difference == Poly(std::vector<Scalar>{0, 0, 1});
  cert.passed = cert.janson_at_radius >= cert.three_r_squared && cert.janson_at_radius > cert.r_squared &&
                zeros_outside && cert.difference_is_t_squared;
  return cert;
}

std::vector<ClusterPoint> asymptotic_clusters(int k, const std::optional<Scalar>& n) {
  if (k < 2) throw std::invalid_argument("cluster prediction needs k >= 2");
  std::vector<ClusterPoint> out;
  if (!n) {
    for (int d = k - 1; d >= 1; --d) out.push_back({Scalar(k, d), d, k - d});
    for (auto& p : out) p.s.canonicalize();
    return out;
  }
  for (int ip = 2; ip <= k; ++ip) {
    for (int jp = 1; jp < ip; ++jp) {
      Scalar s = Scalar(k) * (*n - k + ip) / (*n * (ip - jp));
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const ClusterPoint& c) { return c.s == s && c.gap == ip - jp; });
      if (it != out.end()) {
        ++it->multiplicity;
      } else {
        out.push_back({s, ip - jp, 1});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ClusterPoint& a, const ClusterPoint& b) { return a.s < b.s; });
  return out;
}

}  // namespace ghostmgf
