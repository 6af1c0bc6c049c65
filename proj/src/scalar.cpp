#include "ghostmgf/scalar.hpp"

#include <cctype>

namespace ghostmgf {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Scalar checked_div(const Scalar& a, const Scalar& b) {
  if (sgn(b) == 0) throw DivisionByZero();
  return a / b;
}

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
  if (start == digits.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string s(digits[0] == '+' ? digits.substr(1) : digits);
  return mpz_class(s, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DivisionByZero();
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

double to_double(const Scalar& x) { return x.get_d(); }

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

}  // namespace ghostmgf
