#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "grid.hpp"

#include "cogcap/error.hpp"
#include "cogcap/specfun.hpp"

using namespace cogcap;
using namespace cogcap::specfun;

TEST_CASE("exg0 matches the high-precision series") {
  for (double x : testgrid::log_space(1e-8, 1e5, 120)) {
    const double ref = oracle::exg0_series(x);
    CHECK(std::fabs(exg0(x) / ref - 1.0) < 1e-13);
  }
}

TEST_CASE("gamma0 is e^-x exg0 and matches E1(1)") {
  CHECK(gamma0(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-15));
  for (double x : {1e-3, 0.5, 2.0, 30.0, 300.0}) {
    CHECK(gamma0(x) == doctest::Approx(std::exp(-x) * oracle::exg0_series(x)).epsilon(1e-13));
  }
  CHECK(gamma0(800.0) == 0.0);
}

TEST_CASE("the two internal evaluations agree at the switch point") {
  for (double x : {0.8, 1.0, 1.5}) {
    const double ser = std::exp(x) * e1_series(x);
    const double cf = exg0_continued_fraction(x);
    CHECK(std::fabs(ser / cf - 1.0) < 1e-14);
  }
  int it = 0;
  exg0_continued_fraction(100.0, &it);
  CHECK(it > 0);
  CHECK(it < 50);
}

TEST_CASE("bounds at x = 1") {
  CHECK(exg0_bound(1.0, BoundParam::upper()) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(exg0_bound(1.0, BoundParam::lower()) ==
        doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-15));
  CHECK(exg0_approx(1.0) ==
        doctest::Approx(0.5 * (std::log(2.0) + 0.5 * std::log(3.0))).epsilon(1e-15));
}

TEST_CASE("bounds sandwich the exact value strictly") {
  for (double x : testgrid::log_space(1e-6, 1e6, 300)) {
    const double e = exg0(x);
    CHECK(exg0_bound(x, BoundParam::lower()) < e);
    CHECK(e < exg0_bound(x, BoundParam::upper()));
    const double a = exg0_approx(x);
    CHECK(a > exg0_bound(x, BoundParam::lower()));
    CHECK(a < exg0_bound(x, BoundParam::upper()));
  }
}

TEST_CASE("bound tightens as c decreases toward the exact value") {
  // c ln(1 + 1/(c x)) is increasing in c, so c = 0.4 falls below the exact value somewhere.
  bool below = false;
  for (double x : testgrid::log_space(1e-3, 1e3, 50)) {
    const double v04 = exg0_bound(x, BoundParam(0.4));
    CHECK(v04 < exg0_bound(x, BoundParam::lower()));
    below = below || v04 < exg0(x);
  }
  CHECK(below);
}

TEST_CASE("BoundParam domain") {
  CHECK_THROWS_AS(BoundParam(0.0), DomainError);
  CHECK_THROWS_AS(BoundParam(-0.5), DomainError);
  CHECK_THROWS_AS(BoundParam(1.5), DomainError);
  CHECK_THROWS_AS(BoundParam(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK(BoundParam(1.0).value() == 1.0);
  CHECK(BoundParam::lower().value() == 0.5);
}

TEST_CASE("argument checks") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  for (double bad : {0.0, -1.0, nan, inf}) {
    CHECK_THROWS_AS(exg0(bad), DomainError);
    CHECK_THROWS_AS(gamma0(bad), DomainError);
    CHECK_THROWS_AS(exg0_bound(bad, BoundParam::upper()), DomainError);
  }
  CHECK_THROWS_AS(upper_inc_gamma_int(0, 1.0), DomainError);
  CHECK_THROWS_AS(upper_inc_gamma_int(2, -1.0), DomainError);
  CHECK_THROWS_AS(truncated_exp_sum(-1, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(-1, 1.0), DomainError);
}

TEST_CASE("upper incomplete gamma at integer shape") {
  CHECK(upper_inc_gamma_int(1, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(upper_inc_gamma_int(3, 2.0) == doctest::Approx(10.0 * std::exp(-2.0)).epsilon(1e-15));
  CHECK(upper_inc_gamma_int(5, 0.0) == doctest::Approx(24.0).epsilon(1e-15));
  // Gamma(s + 1, x) = s Gamma(s, x) + x^s e^{-x}, on both evaluation branches.
  for (auto [s, x] : {std::pair<int, double>{5, 3.0}, {40, 10.0}, {160, 800.0}}) {
    const double lhs = upper_inc_gamma_int(s + 1, x);
    const double rhs = s * upper_inc_gamma_int(s, x) + std::exp(s * std::log(x) - x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("truncated exponential sum") {
  CHECK(truncated_exp_sum(0, 5.0) == 1.0);
  CHECK(truncated_exp_sum(2, 2.0) == doctest::Approx(5.0));
  CHECK(truncated_exp_sum(60, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("Laguerre recurrence matches the explicit sum") {
  for (int k = 0; k <= 30; ++k) {
    for (double x : {0.0, 0.3, 1.0, 2.5, 5.0}) {
      CHECK(laguerre(k, x) == doctest::Approx(oracle::laguerre_explicit(k, x)).epsilon(1e-10));
    }
  }
  CHECK(laguerre(0, 3.0) == 1.0);
  CHECK(laguerre(1, 3.0) == -2.0);
}
