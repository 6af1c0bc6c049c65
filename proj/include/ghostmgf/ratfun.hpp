#pragma once

#include <vector>

#include "ghostmgf/bigfloat.hpp"
#include "ghostmgf/poly.hpp"
#include "ghostmgf/scalar.hpp"

namespace ghostmgf {

/// Linear denominator factor (1 - t/pole)^multiplicity.
struct LinFactor {
  Scalar pole;
  int multiplicity = 1;

  friend bool operator==(const LinFactor&, const LinFactor&) = default;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational function numer(t) / prod (1 - t/p)^mult with the denominator kept
/// factored. Factors are sorted by pole with equal poles merged, so every
/// factor equals 1 at t = 0 and the value at the origin is numer(0).
class RatFun {
 public:
  RatFun() = default;  // zero
  explicit RatFun(Poly numer, std::vector<LinFactor> denom = {});
  static RatFun constant(const Scalar& c);

  const Poly& numer() const { return numer_; }
  const std::vector<LinFactor>& denom() const { return denom_; }
  /// Sum of multiplicities.
  int denom_degree() const;
  /// Expanded denominator prod (1 - t/p)^mult.
  Poly denom_poly() const;
  int multiplicity_of(const Scalar& pole) const;
  bool is_zero() const { return numer_.is_zero(); }

  Scalar value_at_zero() const { return numer_.coeff(0); }
  /// Exact value; throws PoleError at a pole.
  Scalar eval(const Scalar& t) const;
  /// Value at a complex point at the given working precision; throws PoleError at a pole.
  BigComplex eval(const BigComplex& z, mpfr_prec_t bits) const;

  /// Sum over the union of the denominators (max multiplicity per pole).
  /// The result is not normalized.
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator*(RatFun a, const Scalar& c);
  /// Multiplies by t.
  RatFun times_t() const;
  /// Multiplies by (1 - t/pole)^-1.
  RatFun over_linear_factor(const Scalar& pole) const;

  /// Numerator and denominator rescaled so each factor reads (a - b t) with
  /// coprime integers a, b > 0: returns numer * prod a^mult.
  Poly display_numerator() const;

  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  Poly numer_;
  std::vector<LinFactor> denom_;
};

struct NormalizeResult {
  RatFun value;
  /// One entry per pole at which numerator roots were removed; multiplicity counts removals.
  std::vector<LinFactor> cancellations;
};

/// Removes every denominator factor whose pole is an exact root of the numerator.
NormalizeResult normalize(const RatFun& r);

/// Exact Taylor coefficients c_0..c_order at t = 0 by power-series division.
std::vector<Scalar> taylor_coeffs(const RatFun& r, int order);

/// Multiset union (max multiplicity per pole) of two sorted factor lists.
std::vector<LinFactor> factor_union(const std::vector<LinFactor>& a, const std::vector<LinFactor>& b);

/// Sorts by pole and merges equal poles by summing multiplicities.
std::vector<LinFactor> merge_factors(std::vector<LinFactor> factors);

}  // namespace ghostmgf
