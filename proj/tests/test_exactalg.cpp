#include <doctest.h>

#include <random>

#include "ghostmgf/ratfun.hpp"
#include "support.hpp"

using namespace ghostmgf;
using testing::from_display;
using testing::poly;
using testing::q;

TEST_SUITE("exactalg") {
  TEST_CASE("scalar arithmetic is exact and canonical") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(49, 36) * 36 == 49);
    CHECK_THROWS_AS(checked_div(q(5), q(0)), DivisionByZero);
    CHECK_THROWS_AS(make_scalar(1, 0), DivisionByZero);
    const Scalar x = q(-6, -4);
    CHECK(x.get_num() == 3);
    CHECK(x.get_den() == 2);
    CHECK(to_string(q(0)) == "0");
    CHECK(to_string(q(-7, 3)) == "-7/3");
  }

  TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("10/3") == q(10, 3));
    CHECK(parse_scalar("-4") == q(-4));
    CHECK(parse_scalar("6/4") == q(3, 2));
    CHECK(parse_scalar("123456789012345678901234567890") == Scalar("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("3/"), ParseError);
    CHECK_THROWS_AS(parse_scalar("a/b"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), DivisionByZero);
  }

  TEST_CASE("polynomial products") {
    CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));
    CHECK((Poly() * poly({4, 5, 6})).is_zero());
    CHECK(poly({3, -1}) * poly({3, -1}) == poly({9, -6, 1}));
    CHECK((poly({1, 2}) * poly({0, 0, 3})).degree() == 3);
    CHECK(Poly().degree() == -1);
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
  }

  TEST_CASE("exact division by linear factors") {
    const Poly p = poly({1, 0, -1});
    auto by_one = p.divide_by_linear_factor(q(1));
    REQUIRE(by_one.has_value());
    CHECK(*by_one == poly({1, 1}));
    CHECK_FALSE(p.divide_by_linear_factor(q(2)).has_value());
    auto general = p.divide_exact(poly({1, -1}));
    REQUIRE(general.has_value());
    CHECK(*general == poly({1, 1}));
    CHECK_FALSE(p.divide_exact(poly({1, 1, 1})).has_value());
  }

  TEST_CASE("taylor shift") {
    // p(t) = t^2 - 1 at t = 1 + u is u^2 + 2u.
    CHECK(poly({-1, 0, 1}).taylor_shift(q(1)) == poly({0, 2, 1}));
  }

  TEST_CASE("addition takes the factor union without normalizing") {
    const RatFun a(Poly::constant(1), {{q(1), 1}});
    const RatFun two = a + a;
    CHECK(two == RatFun(Poly::constant(2), {{q(1), 1}}));
    CHECK(a + RatFun() == a);

    // 1/(3-t) + 1/(4-t)
    const RatFun s = from_display(1, {1}, {{3, 1, 1}}) + from_display(1, {1}, {{4, 1, 1}});
    CHECK(s.value_at_zero() == q(7, 12));
    CHECK(s.denom() == std::vector<LinFactor>{{q(3), 1}, {q(4), 1}});
    CHECK(s.numer() == Poly({q(7, 12), q(-1, 6)}));
    CHECK(s.eval(q(-1)) == q(1, 4) + q(1, 5));

    // Shared pole with different multiplicities keeps the larger one.
    const RatFun u = RatFun(Poly::constant(1), {{q(2), 2}}) + RatFun(Poly::constant(1), {{q(2), 1}, {q(5), 1}});
    CHECK(u.denom() == std::vector<LinFactor>{{q(2), 2}, {q(5), 1}});
  }

  TEST_CASE("normalize removes numerator roots at poles") {
    const RatFun r(poly({1, -1}), {{q(1), 1}, {q(2), 1}});
    const auto res = normalize(r);
    CHECK(res.value == RatFun(Poly::constant(1), {{q(2), 1}}));
    CHECK(res.cancellations == std::vector<LinFactor>{{q(1), 1}});
    CHECK(normalize(res.value).value == res.value);
    CHECK(normalize(res.value).cancellations.empty());

    const RatFun f333 = from_display(6, {162, -90, 16, -1}, {{3, 1, 5}, {4, 1, 1}});
    CHECK(normalize(f333).value == f333);
    CHECK(normalize(f333).cancellations.empty());
  }

  TEST_CASE("canonical form does not depend on addition order") {
    const RatFun a = from_display(1, {2}, {{3, 1, 2}});
    const RatFun b = from_display(1, {1, 1}, {{4, 1, 1}});
    const RatFun c = from_display(3, {1}, {{3, 1, 1}, {7, 2, 1}});
    CHECK(normalize((a + b) + c).value == normalize(a + (c + b)).value);
    CHECK(normalize((c + a) + b).value == normalize(b + (a + c)).value);
  }

  TEST_CASE("r + r evaluates to twice r") {
    const RatFun r = from_display(5, {1, -2, 1}, {{3, 1, 2}, {9, 2, 1}});
    for (long t : {-5L, -1L, 0L, 1L, 2L, 10L}) CHECK((r + r).eval(q(t)) == 2 * r.eval(q(t)));
  }

  TEST_CASE("taylor coefficients") {
    const RatFun geo(Poly::constant(1), {{q(9), 1}});
    const auto c = taylor_coeffs(geo, 6);
    Scalar expect = 1;
    for (int p = 0; p <= 6; ++p) {
      CHECK(c[static_cast<std::size_t>(p)] == expect);
      expect /= 9;
    }

    const RatFun f333 = from_display(6, {162, -90, 16, -1}, {{3, 1, 5}, {4, 1, 1}});
    const auto t = taylor_coeffs(f333, 3);
    CHECK(t[0] == 1);
    CHECK(t[1] == q(49, 36));
    CHECK(t[2] == q(1529, 1296));
    CHECK(t[3] == q(12811, 15552));
  }

  TEST_CASE("taylor coefficients agree with a factor-wise series product") {
    std::mt19937_64 rng(11);
    auto small = [&](int lo, int hi) { return static_cast<long>(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1))); };
    const int order = 8;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Scalar> nc;
      for (int i = 0; i <= 3; ++i) nc.push_back(q(small(-9, 9), small(1, 5)));
      nc.back() = q(small(1, 9));
      std::vector<LinFactor> factors;
      for (int i = 0; i < 5; ++i) factors.push_back({q(small(1, 12), small(1, 4)), 1});
      const RatFun r(Poly(nc), factors);

      // Oracle: numerator times each geometric series sum (t/p)^i, truncated.
      std::vector<Scalar> series(order + 1);
      for (int i = 0; i <= 3; ++i) series[static_cast<std::size_t>(i)] = nc[static_cast<std::size_t>(i)];
      for (const auto& f : factors) {
        std::vector<Scalar> next(order + 1);
        for (int i = 0; i <= order; ++i) {
          Scalar pw = 1;
          for (int j = 0; i + j <= order; ++j) {
            next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * pw;
            pw /= f.pole;
          }
        }
        series = next;
      }
      CHECK(taylor_coeffs(r, order) == series);
    }
  }

  TEST_CASE("truncated taylor polynomial is within the geometric tail bound") {
    const RatFun r = from_display(6, {162, -90, 16, -1}, {{3, 1, 5}, {4, 1, 1}});
    const int P = 6;
    const Scalar t = q(1, 1000);
    const auto c = taylor_coeffs(r, P);
    Scalar partial = 0, pw = 1;
    for (int p = 0; p <= P; ++p) {
      partial += c[static_cast<std::size_t>(p)] * pw;
      pw *= t;
    }
    // |c_p| <= M rho^-p with rho = 2 on the circle |t| = 2 where |r| <= M.
    // max |numer| / min |denom| on |t| = 2: numer sum of |coeffs|, denom >= (1/3)^5 (1/2).
    Scalar numer_bound = 0, two = 1;
    for (const auto& x : r.numer().coeffs()) {
      numer_bound += abs(x) * two;
      two *= 2;
    }
    const Scalar M = numer_bound / (q(1, 243) * q(1, 2));
    Scalar tail = M;
    for (int p = 0; p <= P; ++p) tail *= t / 2;
    tail /= 1 - t / 2;
    CHECK(abs(partial - r.eval(t)) <= tail);
  }

  TEST_CASE("complex evaluation") {
    const RatFun f333 = from_display(6, {162, -90, 16, -1}, {{3, 1, 5}, {4, 1, 1}});
    const BigComplex at0 = f333.eval(BigComplex(0.0, 0.0, 128), 128);
    CHECK(at0.re.to_double() == doctest::Approx(1.0));
    CHECK(at0.im.is_zero());
    // The real zero is 3.5085015; next to the fivefold pole at 3 the function is
    // steep enough that the three-digit value 3.509 still gives |F| near 2.6.
    const BigComplex at_root = f333.eval(BigComplex(3.5085015, 0.0, 128), 128);
    CHECK(at_root.abs().to_double() < 1e-2);
    const BigComplex rounded = f333.eval(BigComplex(BigFloat(q(3509, 1000), 128), BigFloat(128)), 128);
    CHECK(rounded.re.to_double() == doctest::Approx(to_double(f333.eval(q(3509, 1000)))).epsilon(1e-14));
    CHECK_THROWS_AS(f333.eval(BigComplex(3.0, 0.0, 128), 128), PoleError);
    CHECK_THROWS_AS(f333.eval(q(4)), PoleError);

    const RatFun f233 = RatFun(poly({9, -1}) * q(1, 9), {{q(9, 2), 1}, {q(6), 2}});
    CHECK(f233.eval(BigComplex(9.0, 0.0, 128), 128).is_zero());
    CHECK(f233.eval(q(9)) == 0);
  }

  TEST_CASE("display form") {
    const RatFun f = from_display(280, {350, -85, 6}, {{7, 2, 1}, {14, 3, 1}, {10, 3, 3}});
    CHECK(f.display_numerator() == poly({98000, -23800, 1680}));
    CHECK(f.denom_degree() == 5);
    CHECK(f.multiplicity_of(q(10, 3)) == 3);
    CHECK(f.multiplicity_of(q(4)) == 0);
  }
}
