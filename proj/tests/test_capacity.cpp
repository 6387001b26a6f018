#include <cmath>
#include <vector>

#include "doctest.h"
#include "grid.hpp"
#include "oracles.hpp"

#include "cogcap/capacity.hpp"
#include "cogcap/error.hpp"

using namespace cogcap;
using specfun::BoundParam;

namespace {

bool well_separated(double a, double b) { return std::fabs(a - b) > 0.1 * std::max(a, b); }

}  // namespace

TEST_CASE("SU quadrature matches the two-exponential closed form") {
  int compared = 0;
  for (const auto& g : testgrid::standard_grid()) {
    const double signal = g.params.gbar1() * g.p_s;
    const double interference = g.params.p_p() * g.params.hbar1();
    if (!well_separated(signal, interference)) continue;
    const double ref = oracle::capacity_closed_form(signal, interference, g.params.n_s());
    const auto q = su_capacity_exact(g.params, g.p_s);
    CHECK(std::fabs(q.value - ref) <= 1e-8);
    CHECK(q.method == Method::quadrature);
    ++compared;
  }
  CHECK(compared >= 100);
}

TEST_CASE("PU quadrature matches the two-exponential closed form") {
  int compared = 0;
  for (const auto& g : testgrid::standard_grid()) {
    const double signal = g.params.hbar0() * g.params.p_p();
    const double interference = g.params.gbar0() * g.p_s;
    if (!well_separated(signal, interference)) continue;
    const double ref = oracle::capacity_closed_form(signal, interference, g.params.n_p());
    CHECK(std::fabs(pu_capacity_with_su_exact(g.params, g.p_s).value - ref) <= 1e-8);
    ++compared;
  }
  CHECK(compared >= 100);
}

TEST_CASE("closed-form bounds sandwich quadrature on the standard grid") {
  for (const auto& g : testgrid::standard_grid()) {
    const auto su = su_capacity_exact(g.params, g.p_s).value;
    const auto sb = su_capacity_bounds(g.params, g.p_s);
    CHECK(sb.lower.value < su);
    CHECK(su < sb.upper.value);
    const auto pu = pu_capacity_with_su_exact(g.params, g.p_s).value;
    const auto pb = pu_capacity_with_su_bounds(g.params, g.p_s);
    CHECK(pb.lower.value < pu);
    CHECK(pu < pb.upper.value);
    const auto pa = pu_capacity_with_su_approx(g.params, g.p_s).value;
    CHECK(pa >= pb.lower.value);
    CHECK(pa <= pb.upper.value);
    CHECK(pa == doctest::Approx(0.5 * (pb.lower.value + pb.upper.value)).epsilon(1e-12));
    CHECK(su >= 0.0);
    CHECK(pu >= 0.0);
  }
}

TEST_CASE("limits of the bounds") {
  const SystemParams p;
  // Without interference the SU bound reduces to the scalar bound.
  SystemParams::Fields f;
  f.hbar1 = 1e-12;
  const SystemParams quiet(f);
  CHECK(su_capacity_bound(quiet, 2.0, BoundParam::upper()).value ==
        doctest::Approx(specfun::exg0_bound(0.5, BoundParam::upper())).epsilon(1e-6));
  CHECK(su_capacity_no_interference(p, 2.0).value == doctest::Approx(specfun::exg0(0.5)));
  CHECK(pu_capacity_alone(p).value == doctest::Approx(specfun::exg0(0.1)));
}

TEST_CASE("monotonicity in P_s") {
  const SystemParams p;
  double su_prev = 0.0;
  double pu_prev = pu_capacity_alone(p).value;
  for (double ps : testgrid::log_space(1e-3, 100.0, 25)) {
    const double su = su_capacity_exact(p, ps).value;
    const double pu = pu_capacity_with_su_exact(p, ps).value;
    CHECK(su > su_prev);
    CHECK(pu < pu_prev);
    su_prev = su;
    pu_prev = pu;
  }
}

TEST_CASE("PU approximation at gamma_p = 10, P_s gbar0 = 1") {
  const SystemParams p;
  const double exact = pu_capacity_with_su_exact(p, 1.0).value;
  CHECK(std::fabs(pu_capacity_with_su_approx(p, 1.0).value - exact) < 0.08);
}

TEST_CASE("degenerate P_s = 0") {
  const SystemParams p;
  const double c_p = pu_capacity_alone(p).value;
  CHECK(pu_capacity_with_su_exact(p, 0.0).value == c_p);
  CHECK(std::fabs(pu_capacity_with_su_exact(p, 1e-12).value - c_p) < 1e-9);
  CHECK(sum_capacity(p, 0.0).value == c_p);
  CHECK(pu_capacity_loss(p, 0.0, LossMode::exact).value == 0.0);
  CHECK_THROWS_AS(su_capacity_exact(p, 0.0), DomainError);
  CHECK_THROWS_AS(su_capacity_exact(p, -1.0), DomainError);
  CHECK_THROWS_AS(pu_capacity_with_su_exact(p, -1.0), DomainError);
  CHECK_THROWS_AS(pu_capacity_with_su_approx(p, 0.0), DomainError);
}

TEST_CASE("loss floors") {
  const SystemParams p;
  const double c_p = pu_capacity_alone(p).value;
  const double approx_floor = c_p - 0.5 * (std::log(11.0) + 0.5 * std::log(21.0));
  CHECK(pu_capacity_loss_floor(p, LossMode::approx) == doctest::Approx(approx_floor));
  CHECK(pu_capacity_loss(p, 0.0, LossMode::approx).value == doctest::Approx(approx_floor));
  CHECK(pu_capacity_loss(p, 1e-9, LossMode::approx).value ==
        doctest::Approx(approx_floor).epsilon(1e-6));
  CHECK(pu_capacity_loss_floor(p, LossMode::bound) ==
        doctest::Approx(c_p - std::log(11.0)));
  CHECK(pu_capacity_loss_floor(p, LossMode::exact) == 0.0);
  CHECK(approx_floor / c_p == doctest::Approx(0.027).epsilon(0.02));
  // Below gamma_p ~ 1.5 the approximate offset changes sign.
  CHECK(pu_capacity_loss_floor(p.with_gamma_p(1.0), LossMode::approx) < 0.0);
}

TEST_CASE("loss is increasing in P_s in every mode") {
  const SystemParams p;
  for (auto mode : {LossMode::exact, LossMode::bound, LossMode::approx}) {
    double prev = pu_capacity_loss(p, 0.0, mode).value;
    for (double ps : testgrid::log_space(1e-3, 100.0, 20)) {
      const double l = pu_capacity_loss(p, ps, mode).value;
      CHECK(l > prev);
      prev = l;
    }
  }
}

TEST_CASE("sum capacity is the sum of the two exact capacities") {
  const SystemParams p;
  const auto s = sum_capacity(p, 0.7);
  CHECK(s.value == doctest::Approx(su_capacity_exact(p, 0.7).value +
                                   pu_capacity_with_su_exact(p, 0.7).value)
                       .epsilon(1e-14));
}

TEST_CASE("series partial sums match the literal double sum") {
  for (auto [r, s] : {std::pair{0.5, 0.1}, std::pair{0.1, 1.0}, std::pair{1.5, 0.3},
                      std::pair{1.0, 2.0}}) {
    // r = P_P hbar1 / (gbar1 P_s), s = N_S / (P_P hbar1) with P_P = 10, hbar1 = 1.
    SystemParams::Fields f;
    f.n_s = s * 10.0;
    const SystemParams p(f);
    const double ps = 10.0 / r;
    const auto terms = oracle::series_terms(r, s, 40);
    double partial = 0.0;
    for (int k = 0; k <= 40; ++k) {
      partial += terms[static_cast<std::size_t>(k)];
      const auto res = su_capacity_series(p, ps, k);
      CHECK(res.terms == k + 1);
      CHECK(res.result.value == doctest::Approx(partial).epsilon(1e-10));
      CHECK(res.result.err_est ==
            doctest::Approx(std::fabs(terms[static_cast<std::size_t>(k)])).epsilon(1e-8));
    }
  }
}

TEST_CASE("series: divergence flag and converged flag") {
  const SystemParams p;  // P_P hbar1 = 10, gbar1 = 1
  for (double ratio : {5.0, 10.0, 50.0}) {
    const auto r = su_capacity_series(p, 10.0 / ratio, 60);
    CHECK(r.terms_growing);
    CHECK_FALSE(r.converged);
  }
  for (double ratio : {0.05, 0.1, 0.2}) {
    CHECK_FALSE(su_capacity_series(p, 10.0 / ratio, 60).terms_growing);
  }
  // The terms shrink only algebraically: at k_max = 60 the remaining error is
  // far above 1e-5 and the flag must say so.
  const auto slow = su_capacity_series(p, 50.0, 60);
  CHECK_FALSE(slow.converged);
  CHECK(std::fabs(slow.result.value - su_capacity_exact(p, 50.0).value) > 1e-5);
  CHECK_THROWS_AS(su_capacity_series(p, 1.0, -1), DomainError);
}

TEST_CASE("series: whenever flagged converged it agrees with quadrature") {
  int converged = 0;
  for (double n_s : {1e-14, 1e-12, 1e-10, 1e-8, 1e-6, 1e-3, 1.0}) {
    for (double ratio : {0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 1.5}) {
      SystemParams::Fields f;
      f.n_s = n_s;
      const SystemParams p(f);
      const double ps = 10.0 / ratio;
      for (int k_max : {20, 40, 60, 120}) {
        const auto s = su_capacity_series(p, ps, k_max);
        if (!s.converged) continue;
        ++converged;
        CHECK(std::fabs(s.result.value - su_capacity_exact(p, ps).value) <= 1e-5);
      }
    }
  }
  MESSAGE("converged cases: " << converged);
  CHECK(converged > 0);
}
