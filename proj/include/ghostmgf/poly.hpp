#pragma once

#include <optional>
#include <vector>

#include "ghostmgf/scalar.hpp"

namespace ghostmgf {

/// Dense univariate polynomial in t over exact rationals.
/// coeffs()[i] is the coefficient of t^i; trailing zeros are never stored,
/// so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  /// The canonical linear factor 1 - t/pole.
  static Poly linear_factor(const Scalar& pole);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i (zero beyond the degree).
  Scalar coeff(int i) const;

  Scalar eval(const Scalar& t) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplies in place by (1 - t/pole), `times` times.
  void mul_linear_factor(const Scalar& pole, int times = 1);
  /// Multiplies by t^power.
  Poly shifted(int power) const;

  /// Quotient q with q * (1 - t/pole) == *this, or nullopt if the remainder is nonzero.
  std::optional<Poly> divide_by_linear_factor(const Scalar& pole) const;
  /// Exact quotient by an arbitrary nonzero divisor, or nullopt if not divisible.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Coefficients of u -> p(a + u).
  Poly taylor_shift(const Scalar& a) const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace ghostmgf
