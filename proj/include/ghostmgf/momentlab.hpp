#pragma once

#include <vector>

#include "ghostmgf/bigfloat.hpp"
#include "ghostmgf/ghostrec.hpp"
#include "ghostmgf/ratfun.hpp"

namespace ghostmgf {

/// Raw moments mu_1..mu_P of an MGF (element p-1 holds mu_p).
std::vector<Scalar> raw_moments(const RatFun& mgf_value, int max_order);

/// Exact cumulants kappa_1..kappa_P.
struct CumulantSeries {
  std::vector<Scalar> kappas;  // kappas[p-1] = kappa_p

  const Scalar& kappa(int p) const { return kappas.at(static_cast<std::size_t>(p - 1)); }
  int max_order() const { return static_cast<int>(kappas.size()); }
  friend bool operator==(const CumulantSeries&, const CumulantSeries&) = default;
};

/// Moment-cumulant recurrence kappa_p = mu_p - sum_{j<p} C(p-1, j-1) kappa_j mu_{p-j}.
CumulantSeries cumulants_from_moments(const std::vector<Scalar>& moments);
CumulantSeries cumulants(const RatFun& mgf_value, int max_order);

/// sum over i, j >= 0, i + j < k of 1 / ((m-i)(n-j)).
Scalar mean_closed_form(int k, const Scalar& m, const Scalar& n);

/// sum_{i=1}^n 1/i^2.
Scalar parisi_mean(int n);

/// Scaling diagnostics of the perfect-matching cost C_n = C_{n,n,n}.
struct RescaledDiagnostics {
  int n = 0;
  int p_max = 0;
  std::vector<double> scaled;  // scaled[p-1] = n^(p-1) kappa_p
  std::vector<double> tilde;   // cumulants of sqrt(n) (C_n - pi^2/6)
  double variance_limit = 0;   // 4 zeta(2) - 4 zeta(3)
  bool scaled_within_factorial_bounds = false;  // (p-1)! <= n^(p-1) kappa_p <= 2 (p-1)! for all p
  bool cumulant_coefficients_log_concave = false;  // kappa_p / p! log-concave in p
};

RescaledDiagnostics rescaled_diagnostics(int n, int max_order);
RescaledDiagnostics rescaled_diagnostics(int n, const CumulantSeries& kappas);

struct ZeroPoleCumulant {
  BigFloat value;
  BigFloat imaginary_residual;  // should vanish for conjugation-closed zeros
};

/// (p-1)! (sum_poles mult / xi^p - sum_zeros 1/rho^p).
ZeroPoleCumulant cumulant_from_zeros_poles(const std::vector<BigComplex>& zeros, const std::vector<LinFactor>& poles,
                                           int p, mpfr_prec_t bits);

/// True when every kappa is strictly positive.
bool all_positive(const CumulantSeries& kappas);

}  // namespace ghostmgf
