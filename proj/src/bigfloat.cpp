#include "ghostmgf/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace ghostmgf {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

void widen(mpfr_ptr x, mpfr_prec_t bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Scalar& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(mpfr_prec_t bits) const {
  BigFloat r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(std::max(digits, 0)), v_, MPFR_RNDN);
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  std::string mant(raw);
  std::string sign_str;
  if (!mant.empty() && mant[0] == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }
  // mant is d1 d2 d3 ... meaning 0.d1d2d3 * 10^exp10.
  std::string out = sign_str + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zeta(unsigned long s, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::two_pow(long e, mpfr_prec_t bits) {
  BigFloat r(1L, bits);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat d = o.norm();
  if (d.is_zero()) throw DivisionByZero();
  BigFloat r = (re * o.re + im * o.im) / d;
  BigFloat i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re *= o;
  im *= o;
  return *this;
}

BigComplex polar(const BigFloat& r, const BigFloat& theta) {
  BigFloat c(theta.precision()), s(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {r * c, r * s};
}

}  // namespace ghostmgf

namespace ghostmgf {

BigFloat BigFloat::infinity(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_inf(r.v_, 1);
  return r;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t bits) {
  BigFloat r(bits);
  if (text == "inf") {
    mpfr_set_inf(r.v_, 1);
  } else if (text == "-inf") {
    mpfr_set_inf(r.v_, -1);
  } else if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("malformed floating value: '" + text + "'");
  }
  return r;
}

}  // namespace ghostmgf
