#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"

#include "cogcap/validate.hpp"

using namespace cogcap;

namespace {

const Check* find(const std::vector<Check>& cs, const std::string& name) {
  for (const auto& c : cs) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("default scenario passes every check") {
  const Report r = validate(default_scenario());
  std::ostringstream os;
  print_report(os, r);
  MESSAGE(os.str());
  CHECK(r.passed());
  REQUIRE(find(r.checks, "pu_approx_max_abs_error") != nullptr);
}

TEST_CASE("negative control: c = 0.4 in the upper slot breaks the sandwich") {
  ValidateOptions o;
  o.samples = 100'000;
  o.inject_upper_c = 0.4;
  const Report r = validate(default_scenario(), o);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(find(r.checks, "exg0_bound_sandwich")->passed);
  CHECK_FALSE(find(r.checks, "su_bound_sandwich")->passed);
  CHECK_FALSE(find(r.checks, "pu_bound_sandwich")->passed);
}

TEST_CASE("observation checks detect violations") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SumCapacityCurve high{10.0, 2.0, {0.1, 0.2, 0.3}, {1.9, 1.8, 1.7}, {1.95, 1.85, 1.75}, 1e-9};
  SumCapacityCurve low{1.0, 0.6, {0.1, 0.2, 0.3}, {0.61, 0.62, 0.63}, {nan, 0.63, 0.64}, 1e-9};
  auto ok = sum_capacity_observations(high, low);
  for (const auto& c : ok) CHECK_MESSAGE(c.passed, c.name);

  SumCapacityCurve bad_high = high;
  bad_high.sum_outage = {1.9, 2.1, 1.7};  // above C_P and not decreasing
  auto v = sum_capacity_observations(bad_high, low);
  CHECK_FALSE(find(v, "sum_below_pu_alone_high_snr")->passed);
  CHECK_FALSE(find(v, "sum_outage_decreasing_high_snr")->passed);
  CHECK_FALSE(find(v, "loss_scheme_sum_geq_outage_scheme_gp10")->passed);

  SumCapacityCurve bad_low = low;
  bad_low.sum_loss = {0.7, 0.65, 0.66};
  CHECK_FALSE(find(sum_capacity_observations(high, bad_low), "sum_loss_increasing_low_snr")->passed);
}
