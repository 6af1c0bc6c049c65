#include "ghostmgf/momentlab.hpp"

#include <cmath>

namespace ghostmgf {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<Scalar> raw_moments(const RatFun& mgf_value, int max_order) {
  if (max_order < 1) throw std::invalid_argument("moment order must be >= 1");
  if (mgf_value.value_at_zero() != 1) {
    throw std::invalid_argument("not a moment generating function: value at 0 is " +
                                to_string(mgf_value.value_at_zero()));
  }
  auto c = taylor_coeffs(mgf_value, max_order);
  std::vector<Scalar> mu(static_cast<std::size_t>(max_order));
  mpz_class fact = 1;
  for (int p = 1; p <= max_order; ++p) {
    fact *= p;
    mu[static_cast<std::size_t>(p - 1)] = c[static_cast<std::size_t>(p)] * Scalar(fact);
  }
  return mu;
}

CumulantSeries cumulants_from_moments(const std::vector<Scalar>& moments) {
  CumulantSeries out;
  const int P = static_cast<int>(moments.size());
  out.kappas.resize(moments.size());
  for (int p = 1; p <= P; ++p) {
    Scalar k = moments[static_cast<std::size_t>(p - 1)];
    for (int j = 1; j < p; ++j) {
      k -= Scalar(binomial(p - 1, j - 1)) * out.kappas[static_cast<std::size_t>(j - 1)] *
           moments[static_cast<std::size_t>(p - j - 1)];
    }
    out.kappas[static_cast<std::size_t>(p - 1)] = k;
  }
  return out;
}

CumulantSeries cumulants(const RatFun& mgf_value, int max_order) {
  return cumulants_from_moments(raw_moments(mgf_value, max_order));
}

Scalar mean_closed_form(int k, const Scalar& m, const Scalar& n) {
  Scalar sum(0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; i + j < k; ++j) {
      Scalar den = (m - i) * (n - j);
      if (sgn(den) == 0) {
        throw SpecError("vanishing denominator (m-" + std::to_string(i) + ")(n-" + std::to_string(j) + ") = 0");
      }
      sum += 1 / den;
    }
  }
  return sum;
}

Scalar parisi_mean(int n) {
  if (n < 1) throw std::invalid_argument("parisi_mean needs n >= 1");
  Scalar sum(0);
  for (int i = 1; i <= n; ++i) sum += Scalar(1, static_cast<unsigned long>(i) * static_cast<unsigned long>(i));
  return sum;
}

RescaledDiagnostics rescaled_diagnostics(int n, int max_order) {
  if (n < 1 || max_order < 2) throw std::invalid_argument("rescaled_diagnostics needs n >= 1 and order >= 2");
  return rescaled_diagnostics(n, cumulants(mgf(make_spec(n, Scalar(n), Scalar(n))), max_order));
}

RescaledDiagnostics rescaled_diagnostics(int n, const CumulantSeries& kappas) {
  constexpr mpfr_prec_t bits = 128;
  RescaledDiagnostics d;
  d.n = n;
  d.p_max = kappas.max_order();
  const BigFloat pi2_6 = BigFloat::pi(bits) * BigFloat::pi(bits) / 6L;
  const BigFloat sqrt_n = sqrt(BigFloat(static_cast<long>(n), bits));
  d.variance_limit = (BigFloat::zeta(2, bits) * 4L - BigFloat::zeta(3, bits) * 4L).to_double();
  d.scaled_within_factorial_bounds = true;
  Scalar factorial_prev(1);  // (p-1)!
  for (int p = 1; p <= d.p_max; ++p) {
    if (p > 1) factorial_prev *= (p - 1);
    const Scalar& k = kappas.kappa(p);
    Scalar np(1);
    for (int i = 1; i < p; ++i) np *= n;
    const Scalar scaled = np * k;
    d.scaled.push_back(to_double(scaled));
    if (scaled < factorial_prev || scaled > 2 * factorial_prev) d.scaled_within_factorial_bounds = false;
    if (p == 1) {
      d.tilde.push_back((sqrt_n * (BigFloat(k, bits) - pi2_6)).to_double());
    } else {
      d.tilde.push_back((pow(sqrt_n, p) * BigFloat(k, bits)).to_double());
    }
  }
  // kappa_p / p! log-concave: a_p^2 >= a_{p-1} a_{p+1}
  d.cumulant_coefficients_log_concave = true;
  std::vector<Scalar> a;
  Scalar fact(1);
  for (int p = 1; p <= d.p_max; ++p) {
    fact *= p;
    a.push_back(kappas.kappa(p) / fact);
  }
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) d.cumulant_coefficients_log_concave = false;
  }
  return d;
}

ZeroPoleCumulant cumulant_from_zeros_poles(const std::vector<BigComplex>& zeros, const std::vector<LinFactor>& poles,
                                           int p, mpfr_prec_t bits) {
  if (p < 1) throw std::invalid_argument("cumulant order must be >= 1");
  BigComplex sum(bits);
  for (const auto& f : poles) {
    BigFloat term = pow(BigFloat(Scalar(1 / f.pole), bits), p) * static_cast<long>(f.multiplicity);
    sum.re += term;
  }
  const BigComplex one(1.0, 0.0, bits);
  for (const auto& z : zeros) {
    BigComplex inv = one / z.with_precision(bits);
    BigComplex power = one;
    for (int i = 0; i < p; ++i) power *= inv;
    sum -= power;
  }
  BigFloat fact(1L, bits);
  for (int i = 2; i < p; ++i) fact *= static_cast<long>(i);
  return {sum.re * fact, sum.im * fact};
}

bool all_positive(const CumulantSeries& kappas) {
  for (const auto& k : kappas.kappas) {
    if (sgn(k) <= 0) return false;
  }
  return true;
}

}  // namespace ghostmgf
