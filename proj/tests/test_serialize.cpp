#include <doctest.h>

#include <random>

#include "ghostmgf/serialize.hpp"
#include "support.hpp"

using namespace ghostmgf;
using testing::q;
using testing::spec;

namespace {

template <typename T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).get<T>();
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("rationals travel as strings") {
    CHECK(Json(q(-7, 3)) == "-7/3");
    CHECK(Json(q(4)) == "4");
    CHECK(Json("5/10").get<Scalar>() == q(1, 2));
    CHECK_THROWS_AS(Json("x").get<Scalar>(), ParseError);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
      Scalar x(static_cast<long>(rng() >> 20) - (1L << 43), static_cast<unsigned long>(rng() % 100000 + 1));
      x.canonicalize();
      x *= Scalar("123456789123456789123456789");
      CHECK(round_trip(x) == x);
    }
  }

  TEST_CASE("algebraic types") {
    const RatFun f = mgf(spec(3, 3, q(10, 3)));
    CHECK(round_trip(f) == f);
    CHECK(round_trip(f.numer()) == f.numer());
    CHECK(round_trip(Poly()) == Poly());
    const Json j = f;
    CHECK(j.at("factors").at(0).at("pole") == "10/3");
    CHECK(j.at("factors").at(0).at("multiplicity") == 3);
    CHECK(round_trip(spec(3, q(5, 2), 4)) == spec(3, q(5, 2), 4));
    const auto pf = partial_fractions(mgf(spec(3, 3, 3)));
    CHECK(round_trip(pf) == pf);
    const DensityModel d = density(mgf(spec(4, 5, 6)));
    CHECK(round_trip(d) == d);
    const CumulantSeries c = cumulants(mgf(spec(4, 4, 4)), 6);
    CHECK(round_trip(c) == c);
  }

  TEST_CASE("float-valued types") {
    const RescaledDiagnostics r = rescaled_diagnostics(5, 6);
    const RescaledDiagnostics back = round_trip(r);
    CHECK(back.scaled == r.scaled);
    CHECK(back.tilde == r.tilde);
    CHECK(back.variance_limit == r.variance_limit);
    CHECK(back.scaled_within_factorial_bounds == r.scaled_within_factorial_bounds);

    const SimResult s = monte_carlo({2, 3, 3}, 500, 4, {0.1, 0.3, 1.0}, 10, 1);
    const SimResult t = round_trip(s);
    CHECK(t.mean == s.mean);
    CHECK(t.variance == s.variance);
    CHECK(t.seed == s.seed);
    CHECK(t.samples == s.samples);
    CHECK(t.histogram.edges == s.histogram.edges);
    CHECK(t.histogram.counts == s.histogram.counts);
    CHECK(t.empirical_cdf_at == s.empirical_cdf_at);
    CHECK(t.spec.m == 3);

    const auto grid = density_grid(density(mgf(spec(3, 3, 3))), 4.0, 11);
    const auto g = round_trip(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(g[i].x == grid[i].x);
      CHECK(g[i].value == grid[i].value);
    }
  }

  TEST_CASE("zero reports round-trip at full precision") {
    for (const auto& s : {spec(3, 3, 3), spec(5, 12, 20), spec(1, 2, 2)}) {
      for (mpfr_prec_t bits : {128, 256}) {
        const ZeroReport r = zero_free_disk(s, bits);
        CHECK(same_report(round_trip(r), r));
      }
    }
  }

  TEST_CASE("janson, certificate and cluster types") {
    const JansonComparison c = janson_compare(spec(3, 4, 5));
    const JansonComparison c2 = round_trip(c);
    CHECK(c2.f_numerator == c.f_numerator);
    CHECK(c2.j_numerator == c.j_numerator);
    CHECK(c2.difference == c.difference);
    CHECK(c2.equal == c.equal);

    const K3Certificate k = zero_free_k3_certificate(q(7, 2), 5);
    const K3Certificate k2 = round_trip(k);
    CHECK(k2.passed == k.passed);
    CHECK(k2.radius == k.radius);
    CHECK(k2.janson_at_radius == k.janson_at_radius);
    CHECK(k2.janson_zeros == k.janson_zeros);

    const auto points = asymptotic_clusters(5, q(20));
    const auto p2 = round_trip(points);
    REQUIRE(p2.size() == points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      CHECK(p2[i].s == points[i].s);
      CHECK(p2[i].gap == points[i].gap);
      CHECK(p2[i].multiplicity == points[i].multiplicity);
    }
  }

  TEST_CASE("csv exports") {
    const ZeroReport r = zero_free_disk(spec(3, 3, 3));
    const std::string csv = zeros_to_csv(r);
    CHECK(csv.rfind("re,im,kind\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 + 6);
    CHECK(csv.find(",pole\n") != std::string::npos);

    const Histogram h{{0.0, 0.5, 1.0}, {3, 4}};
    CHECK(histogram_to_csv(h) == "bin_lo,bin_hi,count\n0,0.5,3\n0.5,1,4\n");
  }
}
