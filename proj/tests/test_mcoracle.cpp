#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ghostmgf/distengine.hpp"
#include "ghostmgf/ghostrec.hpp"
#include "ghostmgf/mcoracle.hpp"
#include "ghostmgf/momentlab.hpp"
#include "support.hpp"

using namespace ghostmgf;

TEST_SUITE("mcoracle") {
  TEST_CASE("sampling is reproducible") {
    auto a = replication_rng(42, 7), b = replication_rng(42, 7), c = replication_rng(42, 8);
    const CostMatrix x = sample_costs(3, 4, a);
    CHECK(x == sample_costs(3, 4, b));
    CHECK_FALSE(x == sample_costs(3, 4, c));
    CHECK(std::all_of(x.data().begin(), x.data().end(), [](double v) { return v > 0; }));
    CHECK_THROWS_AS(sample_costs(0, 3, a), std::invalid_argument);
  }

  TEST_CASE("open unit interval") {
    auto rng = replication_rng(1, 0);
    for (int i = 0; i < 100000; ++i) {
      const double u = open_unit(rng);
      REQUIRE(u > 0.0);
      REQUIRE(u < 1.0);
    }
  }

  TEST_CASE("exponential entries have mean 1") {
    double sum = 0;
    long count = 0;
    for (std::uint64_t i = 0; count < 1000000; ++i) {
      auto rng = replication_rng(3, i);
      const CostMatrix c = sample_costs(3, 3, rng);
      for (double v : c.data()) {
        sum += v;
        ++count;
      }
    }
    CHECK(std::abs(sum / static_cast<double>(count) - 1.0) < 0.005);
  }

  TEST_CASE("minimum of nine entries has mean 1/9") {
    const long reps = 1000000;
    double sum = 0;
    for (long i = 0; i < reps; ++i) {
      auto rng = replication_rng(9, static_cast<std::uint64_t>(i));
      const CostMatrix c = sample_costs(3, 3, rng);
      const auto& d = c.data();
      sum += *std::min_element(d.begin(), d.end());
    }
    const double se = (1.0 / 9) / std::sqrt(static_cast<double>(reps));
    CHECK(std::abs(sum / reps - 1.0 / 9) < 3 * se);
  }

  TEST_CASE("solver basics") {
    auto rng = replication_rng(0, 0);
    const CostMatrix c = sample_costs(4, 6, rng);
    const Matching one = min_cost_k_matching(c, 1);
    CHECK(one.cost == *std::min_element(c.data().begin(), c.data().end()));
    CHECK(min_cost_k_matching(c, 0).cost == 0.0);
    CHECK(min_cost_k_matching(c, 0).edges.empty());

    CostMatrix diag(4, 4, 1.0);
    for (int i = 0; i < 4; ++i) diag(i, i) = 0.0;
    CHECK(min_cost_k_matching(diag, 4).cost == 0.0);
    CHECK(brute_force_min(diag, 4) == 0.0);

    CHECK_THROWS_AS(min_cost_k_matching(c, 5), std::out_of_range);
    CHECK_THROWS_AS(min_cost_k_matching(c, -1), std::out_of_range);
    CHECK_THROWS_AS(brute_force_min(c, 5), std::out_of_range);
    CHECK_THROWS_AS(brute_force_min(CostMatrix(12, 12, 1.0), 6), std::length_error);
    CHECK_THROWS_AS(CostMatrix(2, 2, std::vector<double>{1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("three by three perfect matching is the best of six permutations") {
    auto rng = replication_rng(5, 5);
    const CostMatrix c = sample_costs(3, 3, rng);
    std::array<int, 3> perm = {0, 1, 2};
    double best = INFINITY;
    do {
      best = std::min(best, c(0, perm[0]) + c(1, perm[1]) + c(2, perm[2]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(brute_force_min(c, 3) == best);
    CHECK(min_cost_k_matching(c, 3).cost == best);
  }

  TEST_CASE("solver equals brute force and every prefix is optimal") {
    for (std::uint64_t trial = 0; trial < 10000; ++trial) {
      auto rng = replication_rng(77, trial);
      const CostMatrix c = sample_costs(5, 5, rng);
      const int k = 1 + static_cast<int>(trial % 3);
      const Matching sol = min_cost_k_matching(c, k);
      REQUIRE(sol.cost == brute_force_min(c, k));
      REQUIRE(sol.edges.size() == static_cast<std::size_t>(k));
      double edge_sum = 0;
      for (const auto& [r, col] : sol.edges) edge_sum += c(r, col);
      REQUIRE(edge_sum == sol.cost);
      for (int j = 1; j <= k; ++j) REQUIRE(sol.prefix_costs[static_cast<std::size_t>(j - 1)] == brute_force_min(c, j));
      for (int j = 1; j < k; ++j) {
        REQUIRE(sol.prefix_costs[static_cast<std::size_t>(j)] > sol.prefix_costs[static_cast<std::size_t>(j - 1)]);
      }
    }
  }

  TEST_CASE("monte carlo results are deterministic and thread independent") {
    const SimSpec s{2, 3, 4};
    const SimResult a = monte_carlo(s, 2000, 17, {0.2, 0.5}, 20, 1);
    const SimResult b = monte_carlo(s, 2000, 17, {0.2, 0.5}, 20, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.variance == b.variance);
    CHECK(a.histogram.counts == b.histogram.counts);
    CHECK(a.empirical_cdf_at == b.empirical_cdf_at);
    CHECK(std::accumulate(a.histogram.counts.begin(), a.histogram.counts.end(), 0L) == 2000);
    CHECK(a.histogram.edges.size() == 21);
    CHECK(simulate_costs(s, 50, 17, 1) == simulate_costs(s, 50, 17, 4));
    CHECK_FALSE(simulate_costs(s, 50, 17, 1) == simulate_costs(s, 50, 18, 1));
    CHECK_THROWS_AS(simulate_costs({4, 3, 3}, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(simulate_costs(s, 0, 0), std::invalid_argument);
  }

  TEST_CASE("ks statistic") {
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_statistic({0.5}, uniform) == doctest::Approx(0.5));
    CHECK(ks_statistic({0.25, 0.75}, uniform) == doctest::Approx(0.25));
    CHECK(ks_critical_1pct(10000) == doctest::Approx(0.0163));
  }
}

TEST_SUITE("mcoracle_slow") {
  TEST_CASE("ten by ten mean matches the finite-n formula") {
    const long samples = 100000;
    const SimResult r = monte_carlo({10, 10, 10}, samples, 2024, {});
    const double se = std::sqrt(r.variance / samples);
    CHECK(std::abs(r.mean - to_double(parisi_mean(10))) < 3 * se);
  }

  TEST_CASE("empirical cdf at the mean matches the exact cdf") {
    const DensityModel d = density(mgf(testing::spec(3, 3, 3)));
    const double mean = 49.0 / 36;
    const SimResult r = monte_carlo({3, 3, 3}, 1000000, 99, {mean});
    CHECK(std::abs(r.empirical_cdf_at[0].second - cdf_eval(d, mean).to_double()) < 3e-3);
  }
}
