#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace ghostmgf {

/// Dense m x n matrix of edge costs (row = left vertex, column = right vertex).
class CostMatrix {
 public:
  CostMatrix(int rows, int cols, std::vector<double> data);
  CostMatrix(int rows, int cols, double fill = 0.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

/// Reproducible stream for replication `index` of a run seeded with `seed`.
std::mt19937_64 replication_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform in the open interval (0, 1) from the top 53 bits.
double open_unit(std::mt19937_64& rng);

/// i.i.d. mean-1 exponential costs, -ln U.
CostMatrix sample_costs(int m, int n, std::mt19937_64& rng);

struct Matching {
  double cost = 0;                        // sum of edge costs in row order
  std::vector<std::pair<int, int>> edges;  // (row, col), sorted by row
  std::vector<double> prefix_costs;        // prefix_costs[j-1] = optimum over j-matchings
};

/// Exact minimum-cost k-matching by k successive shortest augmenting paths with
/// vertex potentials. Every prefix is optimal, so prefix_costs holds C_1..C_k.
Matching min_cost_k_matching(const CostMatrix& c, int k);

/// Exhaustive minimum over all k-matchings, summing each candidate in row order.
/// Throws std::length_error when there are more than 1e7 candidates.
double brute_force_min(const CostMatrix& c, int k);

struct SimSpec {
  int k = 1;
  int m = 1;
  int n = 1;
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 edges
  std::vector<long> counts;
};

struct SimResult {
  SimSpec spec;
  long samples = 0;
  double mean = 0;
  double variance = 0;  // unbiased
  Histogram histogram;
  std::vector<std::pair<double, double>> empirical_cdf_at;
  std::uint64_t seed = 0;
};

/// Minimum k-matching costs of `samples` independent instances; replication i
/// draws from replication_rng(seed, i). Work is split over `threads` workers and
/// merged by index, so the output does not depend on the thread count.
std::vector<double> simulate_costs(const SimSpec& spec, long samples, std::uint64_t seed, unsigned threads = 0);

SimResult monte_carlo(const SimSpec& spec, long samples, std::uint64_t seed, const std::vector<double>& cdf_probes,
                      int bins = 50, unsigned threads = 0);

/// sup_x |F_empirical(x) - cdf(x)| over sorted samples.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Kolmogorov-Smirnov critical value at the 1% level, 1.63 / sqrt(N).
double ks_critical_1pct(long samples);

}  // namespace ghostmgf
