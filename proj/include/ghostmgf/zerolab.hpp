#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghostmgf/bigfloat.hpp"
#include "ghostmgf/ghostrec.hpp"
#include "ghostmgf/ratfun.hpp"

namespace ghostmgf {

constexpr mpfr_prec_t kDefaultPrecisionBits = 256;

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  /// Relative correction sizes of the best iterate, one per root.
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class WindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootResult {
  std::vector<BigComplex> roots;  // ordered by real part, then imaginary part
  mpfr_prec_t working_bits = 0;   // precision at which the iteration was accepted
  int iterations = 0;
};

/// All complex roots of p, accurate to about `bits`, by Aberth-Ehrlich iteration
/// started on a circle of Fujiwara-bound radius and polished by one simultaneous
/// step at doubled precision. The working precision starts at `bits` and doubles
/// (warm-started) until the roots reproduce the coefficient sum and product and
/// are closed under conjugation to 2^(-bits/2).
RootResult polynomial_roots_detailed(const Poly& p, mpfr_prec_t bits);
std::vector<BigComplex> polynomial_roots(const Poly& p, mpfr_prec_t bits);

/// Zeros of the numerator of r.
std::vector<BigComplex> find_zeros(const RatFun& r, mpfr_prec_t bits = kDefaultPrecisionBits);

/// Net number of zeros of p inside |t| = radius, by adaptive argument tracking.
/// Throws WindingError when p vanishes on the circle or the total is not an integer.
int winding_count(const Poly& p, const Scalar& radius, mpfr_prec_t bits);

/// True when |im| is below 2^(-bits/2) relative to |z|.
bool is_real_zero(const BigComplex& z, mpfr_prec_t bits);

struct ZeroReport {
  ProblemSpec spec;
  std::vector<BigComplex> zeros;
  std::vector<LinFactor> poles;
  Scalar disk_radius;  // mn/k
  BigFloat min_zero_modulus;
  bool zero_free = false;
  int winding = 0;
  int zeros_inside = 0;   // zeros with modulus < radius (1 - 1e-9)
  int real_zeros = 0;
  int conjugate_pairs = 0;
  BigFloat min_real_part;  // "overhang" diagnostic
  double vieta_residual = 0;  // max relative error of sum and product of zeros
  bool conjugate_closed = false;
  mpfr_prec_t precision_bits = kDefaultPrecisionBits;
  mpfr_prec_t working_bits = kDefaultPrecisionBits;
};

ZeroReport analyze_zeros(const ProblemSpec& spec, const RatFun& f, mpfr_prec_t bits = kDefaultPrecisionBits);
ZeroReport zero_free_disk(const ProblemSpec& spec, mpfr_prec_t bits = kDefaultPrecisionBits);

/// Janson's comparison function: default denominator of k-1 over that of k.
RatFun janson(const ProblemSpec& spec);

/// Numerator of r over the common denominator q (r * q), which must be a polynomial.
Poly numerator_over(const RatFun& r, const Poly& q);

/// F_{k,m,n} and J_{k,m,n} written over one common denominator, both numerators
/// scaled to prod over i + j < k - 1 of (m-i)(n-j) at t = 0.
struct JansonComparison {
  Poly f_numerator;
  Poly j_numerator;  // prod ((m-i)(n-j) - (k-1-i-j) t)
  Poly difference;   // j_numerator - f_numerator
  bool equal = false;  // J == F as normalized rational functions
};

JansonComparison janson_compare(const ProblemSpec& spec);

struct K3Certificate {
  bool passed = false;
  Scalar radius;               // mn/3
  Scalar janson_at_radius;     // P_J(R)
  Scalar three_r_squared;      // 3 R^2
  Scalar r_squared;            // R^2
  std::vector<Scalar> janson_zeros;  // mn/2, (m-1)n, m(n-1)
  bool difference_is_t_squared = false;  // P - P_J == t^2 from the recursion
};

/// Exact witness that F_{3,m,n} has no zero in |t| <= mn/3.
K3Certificate zero_free_k3_certificate(const Scalar& m, const Scalar& n);

struct ClusterPoint {
  Scalar s;          // rescaled location s = k t / (m n)
  int gap = 1;       // i' - j'
  int multiplicity = 1;
};

/// Limit zero locations in s. With n: the large-m points k(n-k+i')/(n(i'-j')),
/// equal points merged. Without n: k/d with multiplicity k-d (pairs i' - j' = d).
std::vector<ClusterPoint> asymptotic_clusters(int k, const std::optional<Scalar>& n = std::nullopt);

}  // namespace ghostmgf
