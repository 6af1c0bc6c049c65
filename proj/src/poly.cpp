#include "ghostmgf/poly.hpp"

#include <algorithm>

namespace ghostmgf {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::linear_factor(const Scalar& pole) {
  if (sgn(pole) == 0) throw DivisionByZero();
  return Poly(std::vector<Scalar>{Scalar(1), Scalar(-1 / pole)});
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

void Poly::mul_linear_factor(const Scalar& pole, int times) {
  if (sgn(pole) == 0) throw DivisionByZero();
  if (is_zero()) return;
  const Scalar inv = 1 / pole;
  for (int r = 0; r < times; ++r) {
    coeffs_.emplace_back(0);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) coeffs_[i] -= coeffs_[i - 1] * inv;
  }
}

Poly Poly::shifted(int power) const {
  if (is_zero() || power == 0) return *this;
  std::vector<Scalar> out(static_cast<std::size_t>(power), Scalar(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(out));
}

std::optional<Poly> Poly::divide_by_linear_factor(const Scalar& pole) const {
  if (sgn(pole) == 0) throw DivisionByZero();
  if (is_zero()) return Poly();
  if (sgn(eval(pole)) != 0) return std::nullopt;
  // p(t) = (1 - t/pole) q(t): q_0 = p_0, q_i = p_i + q_{i-1}/pole.
  const Scalar inv = 1 / pole;
  std::vector<Scalar> q(coeffs_.size() - 1);
  Scalar prev(0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    prev = coeffs_[i] + prev * inv;
    q[i] = prev;
  }
  return Poly(std::move(q));
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return Poly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Scalar> rem = coeffs_;
  const int dd = divisor.degree();
  const Scalar lead = divisor.coeffs_.back();
  std::vector<Scalar> q(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree() - dd; i >= 0; --i) {
    Scalar c = rem[static_cast<std::size_t>(i + dd)] / lead;
    q[static_cast<std::size_t>(i)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Scalar& x) { return sgn(x) != 0; })) return std::nullopt;
  return Poly(std::move(q));
}

Poly Poly::taylor_shift(const Scalar& a) const {
  // Repeated synthetic division (Horner scheme), O(deg^2).
  std::vector<Scalar> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return Poly(std::move(c));
}

}  // namespace ghostmgf
