#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghostmgf {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Scalar = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// num/den in lowest terms; throws DivisionByZero when den == 0.
Scalar make_scalar(long num, long den = 1);

/// Quotient a/b; throws DivisionByZero when b == 0.
Scalar checked_div(const Scalar& a, const Scalar& b);

/// Parses "p", "-p" or "p/q" (decimal integers of any length).
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& x);

/// Double approximation, for reporting only.
double to_double(const Scalar& x);

bool is_integer(const Scalar& x);

}  // namespace ghostmgf
