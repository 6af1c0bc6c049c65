#include "ghostmgf/mcoracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace ghostmgf {

CostMatrix::CostMatrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("cost matrix needs positive dimensions");
  if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("cost matrix data has wrong size");
  }
}

CostMatrix::CostMatrix(int rows, int cols, double fill)
    : CostMatrix(rows, cols, std::vector<double>(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill)) {}

std::mt19937_64 replication_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

CostMatrix sample_costs(int m, int n, std::mt19937_64& rng) {
  if (m < 1 || n < 1) throw std::invalid_argument("sample_costs needs m, n >= 1");
  std::vector<double> data(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (auto& x : data) x = -std::log(open_unit(rng));
  return CostMatrix(m, n, std::move(data));
}

namespace {

double row_order_sum(const CostMatrix& c, const std::vector<int>& col_of_row) {
  double s = 0.0;
  for (int r = 0; r < c.rows(); ++r) {
    if (col_of_row[static_cast<std::size_t>(r)] >= 0) s += c(r, col_of_row[static_cast<std::size_t>(r)]);
  }
  return s;
}

}  // namespace

Matching min_cost_k_matching(const CostMatrix& c, int k) {
  const int m = c.rows(), n = c.cols();
  if (k < 0 || k > std::min(m, n)) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside [0, min(m, n)]");
  }
  // Nodes: 0 = source, 1..m rows, m+1..m+n columns, m+n+1 = sink.
  const int V = m + n + 2, S = 0, T = m + n + 1;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<int> col_of_row(static_cast<std::size_t>(m), -1), row_of_col(static_cast<std::size_t>(n), -1);
  std::vector<double> pot(static_cast<std::size_t>(V), 0.0);
  Matching out;

  auto edge_cost = [&](int u, int v) -> double {
    // Residual edge cost u -> v, or inf when absent.
    if (u == S) return (v >= 1 && v <= m && col_of_row[static_cast<std::size_t>(v - 1)] < 0) ? 0.0 : inf;
    if (u >= 1 && u <= m) {
      const int r = u - 1;
      if (v == S) return col_of_row[static_cast<std::size_t>(r)] >= 0 ? 0.0 : inf;
      if (v > m && v < T) {
        const int col = v - m - 1;
        return col_of_row[static_cast<std::size_t>(r)] == col ? inf : c(r, col);
      }
      return inf;
    }
    if (u > m && u < T) {
      const int col = u - m - 1;
      if (v == T) return row_of_col[static_cast<std::size_t>(col)] < 0 ? 0.0 : inf;
      if (v >= 1 && v <= m) return row_of_col[static_cast<std::size_t>(col)] == v - 1 ? -c(v - 1, col) : inf;
      return inf;
    }
    if (u == T && v > m && v < T) return row_of_col[static_cast<std::size_t>(v - m - 1)] >= 0 ? 0.0 : inf;
    return inf;
  };

  for (int step = 0; step < k; ++step) {
    // Dense Dijkstra on reduced costs w(u,v) + pot[u] - pot[v] >= 0.
    std::vector<double> dist(static_cast<std::size_t>(V), inf);
    std::vector<int> parent(static_cast<std::size_t>(V), -1);
    std::vector<char> fixed(static_cast<std::size_t>(V), 0);
    dist[S] = 0.0;
    for (int it = 0; it < V; ++it) {
      int u = -1;
      for (int v = 0; v < V; ++v) {
        if (!fixed[static_cast<std::size_t>(v)] && dist[static_cast<std::size_t>(v)] < inf &&
            (u < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(u)])) {
          u = v;
        }
      }
      if (u < 0) break;
      fixed[static_cast<std::size_t>(u)] = 1;
      for (int v = 0; v < V; ++v) {
        if (fixed[static_cast<std::size_t>(v)]) continue;
        const double w = edge_cost(u, v);
        if (w == inf) continue;
        const double reduced = std::max(0.0, w + pot[static_cast<std::size_t>(u)] - pot[static_cast<std::size_t>(v)]);
        const double nd = dist[static_cast<std::size_t>(u)] + reduced;
        if (nd < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = nd;
          parent[static_cast<std::size_t>(v)] = u;
        }
      }
    }
    if (dist[T] == inf) throw std::logic_error("no augmenting path");
    for (int v = 0; v < V; ++v) {
      if (dist[static_cast<std::size_t>(v)] < inf) pot[static_cast<std::size_t>(v)] += dist[static_cast<std::size_t>(v)];
    }
    // Augment along the path; row -> col edges enter the matching, col -> row edges leave it.
    for (int v = T; v != S;) {
      const int u = parent[static_cast<std::size_t>(v)];
      if (u >= 1 && u <= m && v > m && v < T) {
        col_of_row[static_cast<std::size_t>(u - 1)] = v - m - 1;
        row_of_col[static_cast<std::size_t>(v - m - 1)] = u - 1;
      }
      v = u;
    }
    out.prefix_costs.push_back(row_order_sum(c, col_of_row));
  }
  for (int r = 0; r < m; ++r) {
    if (col_of_row[static_cast<std::size_t>(r)] >= 0) out.edges.emplace_back(r, col_of_row[static_cast<std::size_t>(r)]);
  }
  out.cost = row_order_sum(c, col_of_row);
  return out;
}

double brute_force_min(const CostMatrix& c, int k) {
  const int m = c.rows(), n = c.cols();
  if (k < 0 || k > std::min(m, n)) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside [0, min(m, n)]");
  }
  // C(m, k) * n! / (n-k)! candidates.
  double count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<double>(m - i) / (i + 1) * (n - i);
  if (count > 1e7) throw std::length_error("too many k-matchings to enumerate");

  double best = std::numeric_limits<double>::infinity();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // Rows are visited in increasing order, so every candidate is summed in row order.
  auto dfs = [&](auto&& self, int row, int chosen, double acc) -> void {
    if (chosen == k) {
      best = std::min(best, acc);
      return;
    }
    if (m - row < k - chosen) return;
    for (int col = 0; col < n; ++col) {
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = 1;
      self(self, row + 1, chosen + 1, acc + c(row, col));
      used[static_cast<std::size_t>(col)] = 0;
    }
    self(self, row + 1, chosen, acc);
  };
  dfs(dfs, 0, 0, 0.0);
  return best;
}

std::vector<double> simulate_costs(const SimSpec& spec, long samples, std::uint64_t seed, unsigned threads) {
  if (spec.k < 1 || spec.k > std::min(spec.m, spec.n)) throw std::invalid_argument("simulation needs 1 <= k <= min(m, n)");
  if (samples < 1) throw std::invalid_argument("simulation needs samples >= 1");
  std::vector<double> out(static_cast<std::size_t>(samples));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, samples));
  auto work = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      auto rng = replication_rng(seed, static_cast<std::uint64_t>(i));
      out[static_cast<std::size_t>(i)] = min_cost_k_matching(sample_costs(spec.m, spec.n, rng), spec.k).cost;
    }
  };
  if (threads == 1) {
    work(0, samples);
    return out;
  }
  std::vector<std::thread> pool;
  const long chunk = (samples + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const long begin = std::min<long>(samples, t * chunk), end = std::min<long>(samples, begin + chunk);
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return out;
}

SimResult monte_carlo(const SimSpec& spec, long samples, std::uint64_t seed, const std::vector<double>& cdf_probes,
                      int bins, unsigned threads) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  std::vector<double> xs = simulate_costs(spec, samples, seed, threads);
  SimResult res;
  res.spec = spec;
  res.samples = samples;
  res.seed = seed;
  // Welford, in index order.
  double mean = 0, m2 = 0;
  long count = 0;
  for (double x : xs) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  res.mean = mean;
  res.variance = samples > 1 ? m2 / static_cast<double>(samples - 1) : 0.0;

  std::sort(xs.begin(), xs.end());
  const double hi = xs.back() > 0 ? xs.back() : 1.0;
  res.histogram.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b) res.histogram.edges[static_cast<std::size_t>(b)] = hi * b / bins;
  res.histogram.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : xs) {
    auto b = static_cast<long>(x / hi * bins);
    b = std::clamp<long>(b, 0, bins - 1);
    ++res.histogram.counts[static_cast<std::size_t>(b)];
  }
  for (double p : cdf_probes) {
    const auto below = std::upper_bound(xs.begin(), xs.end(), p) - xs.begin();
    res.empirical_cdf_at.emplace_back(p, static_cast<double>(below) / static_cast<double>(samples));
  }
  return res;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::max(static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n));
  }
  return d;
}

double ks_critical_1pct(long samples) { return 1.63 / std::sqrt(static_cast<double>(samples)); }

}  // namespace ghostmgf
