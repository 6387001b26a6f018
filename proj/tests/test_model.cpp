#include <cmath>
#include <limits>

#include "doctest.h"

#include "cogcap/error.hpp"
#include "cogcap/model.hpp"

using namespace cogcap;

TEST_CASE("defaults and derived ratios") {
  const SystemParams p;
  CHECK(p.p_p() == 10.0);
  CHECK(p.gamma_p() == 10.0);
  CHECK(p.gamma_sp() == 10.0);
  SystemParams::Fields f;
  f.p_p = 4.0;
  f.hbar0 = 2.0;
  f.n_p = 0.5;
  f.hbar1 = 0.25;
  f.n_s = 2.0;
  const SystemParams q(f);
  CHECK(q.gamma_p() == 16.0);
  CHECK(q.gamma_sp() == 0.5);
  CHECK(ratios(q).gamma_p == 16.0);
}

TEST_CASE("from_ratios back-solves P_P and hbar1") {
  const auto p = SystemParams::from_ratios(3.0, 0.2, 2.0, 0.5, 1.0, 1.0, 4.0);
  CHECK(p.gamma_p() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(p.gamma_sp() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(p.p_p() == doctest::Approx(3.0 * 0.5 / 4.0));
}

TEST_CASE("gamma_p overrides") {
  const SystemParams p;
  const auto a = p.with_gamma_p(1.0);
  CHECK(a.gamma_p() == doctest::Approx(1.0));
  CHECK(a.gamma_sp() == doctest::Approx(1.0));  // P_P scaled, so gamma_sp follows
  const auto b = p.with_gamma_p_link(100.0);
  CHECK(b.gamma_p() == doctest::Approx(100.0));
  CHECK(b.gamma_sp() == p.gamma_sp());
  CHECK(b.p_p() == p.p_p());
}

TEST_CASE("invalid parameters") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double bad : {0.0, -1.0, nan, std::numeric_limits<double>::infinity()}) {
    SystemParams::Fields f;
    f.gbar0 = bad;
    CHECK_THROWS_AS(SystemParams{f}, DomainError);
    CHECK_THROWS_AS(SystemParams().with_gamma_p(bad), DomainError);
  }
  CHECK_THROWS_AS(Constraints(0.0, 0.1), DomainError);
  CHECK_THROWS_AS(Constraints(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(Constraints(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Constraints(1.0, 0.1, 1.0), DomainError);
  CHECK_NOTHROW(Constraints(1.0, 0.1, 0.05));
}

TEST_CASE("threshold from gamma_p") {
  CHECK(ith_from_gamma_p(SystemParams(), 0.1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ith_from_gamma_p(SystemParams().with_gamma_p(1.0), 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ith_from_gamma_p(SystemParams(), 0.0), DomainError);
  CHECK_THROWS_AS(ith_from_gamma_p(SystemParams(), 1.5), DomainError);
}

TEST_CASE("uniform mapping stays in (0, 1]") {
  CHECK(unit_interval_open_closed(0) == 0x1.0p-53);
  CHECK(unit_interval_open_closed(~std::uint64_t{0}) == 1.0);
}

TEST_CASE("sampler determinism and chunk seeking") {
  const SystemParams p;
  const std::size_t n = kChunkSamples + 1000;
  const auto a = sample_channels(p, 7, n);
  const auto b = sample_channels(p, 7, n);
  const auto c = sample_channels(p, 8, 10);
  REQUIRE(a.size() == n);
  CHECK(a[0].g0 == b[0].g0);
  CHECK(a[n - 1].h1 == b[n - 1].h1);
  CHECK(a[0].g0 != c[0].g0);
  for (std::uint64_t start : {std::uint64_t{5}, std::uint64_t{kChunkSamples - 1},
                              std::uint64_t{kChunkSamples + 17}}) {
    ChannelSampler s(p, 7, start);
    const auto x = s.next();
    CHECK(x.g0 == a[start].g0);
    CHECK(x.h1 == a[start].h1);
    CHECK(s.position() == start + 1);
  }
  CHECK_THROWS_AS(sample_channels(p, 7, 0), DomainError);
  CHECK(split_seed(1, 0) != split_seed(1, 1));
  CHECK(split_seed(1, 0) != split_seed(2, 0));
}

TEST_CASE("sampled gains are exponential with the configured means") {
  SystemParams::Fields f;
  f.gbar0 = 0.5;
  f.gbar1 = 2.0;
  f.hbar0 = 3.0;
  f.hbar1 = 0.1;
  const SystemParams p(f);
  const std::size_t n = 200'000;
  const auto xs = sample_channels(p, 99, n);
  double m[4] = {0, 0, 0, 0};
  int above_median = 0;
  for (const auto& s : xs) {
    m[0] += s.g0;
    m[1] += s.g1;
    m[2] += s.h0;
    m[3] += s.h1;
    CHECK_FALSE(s.g0 < 0.0);
    above_median += s.g1 > 2.0 * std::log(2.0);
  }
  const double means[4] = {0.5, 2.0, 3.0, 0.1};
  for (int i = 0; i < 4; ++i) {
    // Exp(mean) has standard deviation = mean.
    CHECK(std::fabs(m[i] / n - means[i]) < 5.0 * means[i] / std::sqrt(double(n)));
  }
  CHECK(std::fabs(above_median / double(n) - 0.5) < 5.0 * 0.5 / std::sqrt(double(n)));
}
