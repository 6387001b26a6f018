#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "cogcap/error.hpp"
#include "cogcap/quadrature.hpp"

using namespace cogcap;

TEST_CASE("polynomials and smooth integrands") {
  const auto r = quad::integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.intervals == 1);
  const auto s = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s.abs_error <= 1e-9);
}

TEST_CASE("endpoint singularity is resolved adaptively") {
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.intervals > 1);
}

TEST_CASE("exponential weight") {
  const auto one = quad::integrate_exp_weight([](double) { return 1.0; });
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));
  // integral of e^{-u} / (x + u) over [0, inf) = e^x E1(x)
  for (double x : {0.01, 0.5, 3.0, 40.0}) {
    const auto r = quad::integrate_exp_weight([x](double u) { return 1.0 / (x + u); });
    CHECK(std::fabs(r.value - oracle::exg0_series(x)) <= 1e-9);
    CHECK(std::fabs(r.value - oracle::exg0_series(x)) <= r.abs_error + 1e-15);
  }
}

TEST_CASE("failure modes") {
  CHECK_THROWS_AS(quad::integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(quad::integrate([](double x) { return x; }, 0.0, INFINITY), DomainError);
  quad::Options tight;
  tight.max_intervals = 2;
  CHECK_THROWS_AS(quad::integrate([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, tight),
                  ConvergenceError);
  CHECK_THROWS_AS(quad::integrate_exp_weight([](double) { return 0.0; }), DomainError);
}
