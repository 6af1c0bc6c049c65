#pragma once

#include <mpfr.h>

#include <string>

#include "ghostmgf/scalar.hpp"

namespace ghostmgf {

/// RAII owner of an MPFR number. Every value carries its own precision;
/// binary operations round to the larger precision of their operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 53);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const Scalar& value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to `bits`.
  BigFloat with_precision(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits (0 = enough to round-trip).
  std::string to_string(int digits = 0) const;
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1 (meaningless for zero).
  long exponent() const { return mpfr_get_exp(v_); }

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat zeta(unsigned long s, mpfr_prec_t bits);
  static BigFloat two_pow(long e, mpfr_prec_t bits);
  static BigFloat infinity(mpfr_prec_t bits);
  /// Parses decimal or scientific notation at the given precision.
  static BigFloat parse(const std::string& text, mpfr_prec_t bits);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);

/// Complex number over BigFloat components.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t bits = 53) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}

  mpfr_prec_t precision() const { return re.precision(); }
  BigComplex with_precision(mpfr_prec_t bits) const { return {re.with_precision(bits), im.with_precision(bits)}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }

  BigFloat norm() const { return re * re + im * im; }
  BigFloat abs() const { return ghostmgf::sqrt(norm()); }
  BigFloat arg() const { return ghostmgf::atan2(im, re); }
  BigComplex conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

BigComplex polar(const BigFloat& r, const BigFloat& theta);

}  // namespace ghostmgf
