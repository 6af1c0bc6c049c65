#include "ghostmgf/ghostrec.hpp"

#include <stdexcept>

namespace ghostmgf {

void ProblemSpec::validate() const {
  if (k < 0) throw SpecError("k must be nonnegative, got " + std::to_string(k));
  if (sgn(m) <= 0) throw SpecError("m must be positive, got " + to_string(m));
  if (sgn(n) <= 0) throw SpecError("n must be positive, got " + to_string(n));
  for (int j = 0; j < k; ++j) {
    if (m - j == 0) throw SpecError("vanishing denominator m - " + std::to_string(j) + " = 0 (spec " + label() + ")");
  }
  for (int i = 1; i <= k; ++i) {
    if (n - k + i == 0) {
      throw SpecError("vanishing denominator n - k + " + std::to_string(i) + " = 0 (spec " + label() + ")");
    }
  }
  if (is_integral()) {
    if (Scalar(k) > m || Scalar(k) > n) {
      throw SpecError("k = " + std::to_string(k) + " exceeds min(m, n) for integer spec " + label());
    }
  }
}

bool ProblemSpec::is_integral() const { return is_integer(m) && is_integer(n); }

std::string ProblemSpec::label() const { return std::to_string(k) + "," + to_string(m) + "," + to_string(n); }

ProblemSpec make_spec(int k, const Scalar& m, const Scalar& n) {
  ProblemSpec s{k, m, n};
  s.validate();
  return s;
}

const GhostTable::Entry& GhostTable::entry(int i, int j) const {
  if (i < 0 || i > spec_.k || j < 0 || j > i) {
    throw std::out_of_range("ghost table index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  return entries_[index(i, j)];
}

std::vector<GhostTable::CancellationRecord> GhostTable::cancellations() const {
  std::vector<CancellationRecord> out;
  for (int i = 0; i <= spec_.k; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (const auto& f : entry(i, j).cancellations) out.push_back({i, j, f});
    }
  }
  return out;
}

GhostTable build_table(const ProblemSpec& spec) {
  spec.validate();
  const int k = spec.k;
  GhostTable table;
  table.spec_ = spec;
  table.entries_.resize(GhostTable::index(k, k) + 1);
  table.entries_[0] = {RatFun::constant(1), {}};

  for (int i = 1; i <= k; ++i) {
    const Scalar right = spec.n - k + i;  // right-side vertex count at this row
    for (int j = 0; j <= i; ++j) {
      const int d = i - j;
      RatFun raw;
      if (d == 0) {
        // F^(0) = (t/n') F^(1) + F^(0)_{i-1}
        raw = table.at(i, j - 1).times_t() * Scalar(1 / right) + table.at(i - 1, j - 1);
      } else {
        const Scalar left = spec.m - j;  // m - k' + d with k' = i
        RatFun sum = table.at(i - 1, j) * Scalar(1 / left);
        if (j > 0) {
          sum = sum + table.at(i, j - 1).times_t() * Scalar(Scalar(d + 1) / right);
          sum = sum + table.at(i - 1, j - 1);
        }
        // (1 - d t / (left * right))^-1
        raw = sum.over_linear_factor(left * right / d);
      }
      auto norm = normalize(raw);
      table.entries_[GhostTable::index(i, j)] = {std::move(norm.value), std::move(norm.cancellations)};
    }
  }
  return table;
}

RatFun mgf(const ProblemSpec& spec) {
  if (spec.k == 0) {
    spec.validate();
    return RatFun::constant(1);
  }
  return build_table(spec).at(spec.k, spec.k);
}

RatFun ghost_mgf(const ProblemSpec& spec, int d) {
  if (d < 0 || d > spec.k) {
    throw std::out_of_range("ghost index d = " + std::to_string(d) + " outside [0, " + std::to_string(spec.k) + "]");
  }
  return build_table(spec).at(spec.k, spec.k - d);
}

std::vector<LinFactor> default_denominator(const ProblemSpec& spec) {
  spec.validate();
  std::vector<LinFactor> factors;
  for (int i = 0; i < spec.k; ++i) {
    for (int j = 0; i + j < spec.k; ++j) {
      factors.push_back({(spec.m - i) * (spec.n - j) / (spec.k - i - j), 1});
    }
  }
  return merge_factors(std::move(factors));
}

Poly default_denominator_unreduced(const ProblemSpec& spec) {
  spec.validate();
  Poly q = Poly::constant(1);
  for (int i = 0; i < spec.k; ++i) {
    for (int j = 0; i + j < spec.k; ++j) {
      Scalar c0 = (spec.m - i) * (spec.n - j);
      q = q * Poly(std::vector<Scalar>{c0, Scalar(-(spec.k - i - j))});
    }
  }
  return q;
}

}  // namespace ghostmgf
