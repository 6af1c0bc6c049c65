#pragma once

#include <string>
#include <vector>

#include "ghostmgf/ratfun.hpp"

namespace ghostmgf {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters of C_{k,m,n}: minimum cost of a k-matching on an m by n
/// complete bipartite graph. m and n may be non-integer rationals.
struct ProblemSpec {
  int k = 0;
  Scalar m;
  Scalar n;

  /// Throws SpecError naming the first vanishing recursion denominator.
  void validate() const;
  bool is_integral() const;
  /// "k,m,n" with rationals as p/q.
  std::string label() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

ProblemSpec make_spec(int k, const Scalar& m, const Scalar& n);

/// Triangular table L_{i,j} = F^{(i-j)}_{i, m, n-k+i} for 0 <= j <= i <= k.
/// i counts all edges of the matching, j the ordinary (non-ghost) ones.
class GhostTable {
 public:
  struct Entry {
    RatFun value;  // normalized
    std::vector<LinFactor> cancellations;
  };

  const ProblemSpec& spec() const { return spec_; }
  const Entry& entry(int i, int j) const;
  const RatFun& at(int i, int j) const { return entry(i, j).value; }
  /// All cancellations recorded while building, as (i, j, factor).
  struct CancellationRecord {
    int i;
    int j;
    LinFactor factor;
  };
  std::vector<CancellationRecord> cancellations() const;

  friend GhostTable build_table(const ProblemSpec& spec);

 private:
  static std::size_t index(int i, int j) { return static_cast<std::size_t>(i * (i + 1) / 2 + j); }
  ProblemSpec spec_;
  std::vector<Entry> entries_;
};

GhostTable build_table(const ProblemSpec& spec);

/// Normalized moment generating function F_{k,m,n}(t) = L_{k,k}.
RatFun mgf(const ProblemSpec& spec);

/// Normalized ghost generating function F^{(d)}_{k,m,n}(t) = L_{k,k-d}, 0 <= d <= k.
RatFun ghost_mgf(const ProblemSpec& spec, int d);

/// Factors (1 - (k-i-j) t / ((m-i)(n-j))) over i, j >= 0, i + j < k, equal poles merged.
std::vector<LinFactor> default_denominator(const ProblemSpec& spec);

/// prod over the same grid of ((m-i)(n-j) - (k-i-j) t), unreduced, as a polynomial.
Poly default_denominator_unreduced(const ProblemSpec& spec);

}  // namespace ghostmgf
