#include "cogcap/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "cogcap/allocation.hpp"
#include "cogcap/error.hpp"
#include "cogcap/montecarlo.hpp"

namespace cogcap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    v[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
  }
  return v;
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Successive differences of a curve, skipping infeasible (nan) entries.
Check monotone(std::string name, const SumCapacityCurve& c, const std::vector<double>& ys,
               double sign) {
  // sign = +1: non-decreasing, -1: non-increasing.  measured = worst violation.
  double worst = -std::numeric_limits<double>::infinity();
  int pairs = 0;
  double prev = kNaN;
  for (double y : ys) {
    if (std::isnan(y)) continue;
    if (!std::isnan(prev)) {
      worst = std::max(worst, -sign * (y - prev));
      ++pairs;
    }
    prev = y;
  }
  Check ch{std::move(name), pairs > 0 && worst <= c.tolerance, worst, c.tolerance, ""};
  ch.detail = std::to_string(pairs) + " consecutive pairs at gamma_p = " + fmt("%g", c.gamma_p);
  return ch;
}

}  // namespace

bool Report::passed() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return !c.passed; }));
}

void print_report(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %-34s measured=%-12.6g threshold=%-10.4g ",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.threshold);
    os << buf << c.detail << '\n';
  }
  os << (r.passed() ? "all " : "") << r.checks.size() - static_cast<std::size_t>(r.failures())
     << '/' << r.checks.size() << " checks passed\n";
}

SumCapacityCurve sum_capacity_curve(const Scenario& scenario, double gamma_p,
                                    const std::vector<double>& constraint, LossMode alloc_mode) {
  SumCapacityCurve c;
  c.gamma_p = gamma_p;
  const SystemParams params = scenario.params.with_gamma_p(gamma_p);
  const Constraints base = scenario.constraints_for(params);
  c.c_p = pu_capacity_alone(params).value;
  c.constraint = constraint;
  double max_err = 0.0;
  for (double x : constraint) {
    const double p_out = mvpa_power(params, Constraints(base.i_th(), x)).p_s;
    const auto so = sum_capacity(params, p_out);
    c.sum_outage.push_back(so.value);
    max_err = std::max(max_err, so.err_est);
    try {
      const double p_loss = loss_based_power(params, x, alloc_mode).p_s;
      const auto sl = sum_capacity(params, p_loss);
      c.sum_loss.push_back(sl.value);
      max_err = std::max(max_err, sl.err_est);
    } catch (const InfeasibleTarget&) {
      c.sum_loss.push_back(kNaN);
    }
  }
  c.tolerance = 2.0 * max_err;
  return c;
}

std::vector<Check> sum_capacity_observations(const SumCapacityCurve& high,
                                             const SumCapacityCurve& low) {
  std::vector<Check> out;
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto* ys : {&high.sum_outage, &high.sum_loss}) {
      for (double y : *ys) {
        if (!std::isnan(y)) worst = std::max(worst, y - high.c_p);
      }
    }
    out.push_back({"sum_below_pu_alone_high_snr", worst < 0.0, worst, 0.0,
                   "max(sum - C_P) at gamma_p = " + fmt("%g", high.gamma_p)});
  }
  out.push_back(monotone("sum_outage_decreasing_high_snr", high, high.sum_outage, -1.0));
  out.push_back(monotone("sum_loss_decreasing_high_snr", high, high.sum_loss, -1.0));
  out.push_back(monotone("sum_outage_increasing_low_snr", low, low.sum_outage, +1.0));
  out.push_back(monotone("sum_loss_increasing_low_snr", low, low.sum_loss, +1.0));
  for (const auto* c : {&low, &high}) {
    double worst = -std::numeric_limits<double>::infinity();
    int compared = 0;
    for (std::size_t i = 0; i < c->constraint.size(); ++i) {
      if (std::isnan(c->sum_loss[i])) continue;
      worst = std::max(worst, c->sum_outage[i] - c->sum_loss[i]);
      ++compared;
    }
    out.push_back({"loss_scheme_sum_geq_outage_scheme" + fmt("_gp%g", c->gamma_p),
                   compared > 0 && worst <= c->tolerance, worst, c->tolerance,
                   "max(sum_outage - sum_loss) over " + std::to_string(compared) + " points"});
  }
  return out;
}

Report validate(const Scenario& scenario, const ValidateOptions& opts) {
  using specfun::BoundParam;
  Report rep;
  const SystemParams& prm = scenario.params;
  const BoundParam lower = BoundParam::lower();
  const BoundParam upper = opts.inject_upper_c ? BoundParam(*opts.inject_upper_c)
                                               : BoundParam::upper();
  const std::vector<double> ps_grid = log_grid(0.01, 10.0, 9);

  {
    double worst = std::numeric_limits<double>::infinity();
    for (double x : log_grid(1e-4, 1e4, 200)) {
      const double e = specfun::exg0(x);
      worst = std::min({worst, (e - specfun::exg0_bound(x, lower)) / e,
                        (specfun::exg0_bound(x, upper) - e) / e});
    }
    rep.checks.push_back({"exg0_bound_sandwich", worst > 0.0, worst, 0.0,
                          "min relative margin over 200 x in [1e-4, 1e4]"});
  }

  double su_margin = std::numeric_limits<double>::infinity();
  double pu_margin = su_margin;
  double approx_margin = su_margin;
  double approx_ratio = 0.0;
  double approx_abs = 0.0;
  double su_z = 0.0;
  double pu_z = 0.0;
  double su_step = su_margin;
  double pu_step = su_margin;
  double prev_su = 0.0;
  double prev_pu = pu_capacity_alone(prm).value;
  for (double p : ps_grid) {
    const double su = su_capacity_exact(prm, p).value;
    const double pu = pu_capacity_with_su_exact(prm, p).value;
    const double sl = su_capacity_bound(prm, p, lower).value;
    const double su_up = su_capacity_bound(prm, p, upper).value;
    const double pl = pu_capacity_with_su_bound(prm, p, lower).value;
    const double pu_up = pu_capacity_with_su_bound(prm, p, upper).value;
    const double pa = pu_capacity_with_su_approx(prm, p).value;
    su_margin = std::min({su_margin, su - sl, su_up - su});
    pu_margin = std::min({pu_margin, pu - pl, pu_up - pu});
    approx_margin = std::min({approx_margin, pa - pl, pu_up - pa});
    approx_abs = std::max(approx_abs, std::fabs(pa - pu));
    const double half_gap =
        0.5 * (pu_capacity_with_su_bound(prm, p, BoundParam::upper()).value - pl);
    approx_ratio = std::max(approx_ratio, std::fabs(pa - pu) / half_gap);

    const auto msu = mc_su_capacity(prm, p, opts.samples, opts.seed);
    const auto mpu = mc_pu_capacity(prm, p, opts.samples, opts.seed);
    su_z = std::max(su_z, std::fabs(su - msu.mean) / msu.std_err);
    pu_z = std::max(pu_z, std::fabs(pu - mpu.mean) / mpu.std_err);
    su_step = std::min(su_step, su - prev_su);
    pu_step = std::min(pu_step, prev_pu - pu);
    prev_su = su;
    prev_pu = pu;
  }
  const std::string grid_note = "p_s in [0.01, 10], 9 log points";
  rep.checks.push_back({"su_bound_sandwich", su_margin > 0.0, su_margin, 0.0,
                        "min(exact - lower, upper - exact), " + grid_note});
  rep.checks.push_back({"pu_bound_sandwich", pu_margin > 0.0, pu_margin, 0.0,
                        "min(exact - lower, upper - exact), " + grid_note});
  rep.checks.push_back({"pu_approx_within_bounds", approx_margin >= 0.0, approx_margin, 0.0,
                        "min distance of the approximation to either bound"});
  rep.checks.push_back({"pu_approx_error_vs_half_gap", approx_ratio <= 1.0, approx_ratio, 1.0,
                        "max |approx - exact| / (half bound gap)"});
  rep.checks.push_back({"pu_approx_max_abs_error", approx_abs < 0.08, approx_abs, 0.08,
                        "max |approx - exact| in nats, " + grid_note});
  rep.checks.push_back({"su_quadrature_vs_mc", su_z <= 3.0, su_z, 3.0,
                        "max |exact - mc| / std_err, n = " + std::to_string(opts.samples)});
  rep.checks.push_back({"pu_quadrature_vs_mc", pu_z <= 3.0, pu_z, 3.0,
                        "max |exact - mc| / std_err, n = " + std::to_string(opts.samples)});
  rep.checks.push_back({"su_increasing_in_p_s", su_step > 0.0, su_step, 0.0,
                        "min successive increase from p_s = 0"});
  rep.checks.push_back({"pu_decreasing_in_p_s", pu_step > 0.0, pu_step, 0.0,
                        "min successive decrease from p_s = 0"});

  {
    int converged = 0;
    double worst = 0.0;
    for (double p : ps_grid) {
      const auto s = su_capacity_series(prm, p, 60);
      if (!s.converged) continue;
      ++converged;
      worst = std::max(worst, std::fabs(s.result.value - su_capacity_exact(prm, p).value));
    }
    rep.checks.push_back({"series_vs_quadrature_where_converged", worst <= 1e-5, worst, 1e-5,
                          std::to_string(converged) + " of " + std::to_string(ps_grid.size()) +
                              " grid points flagged converged at k_max = 60"});
  }
  {
    bool all = true;
    for (double r : {5.0, 10.0}) {
      const double p = prm.p_p() * prm.hbar1() / (prm.gbar1() * r);
      all = all && su_capacity_series(prm, p, 60).terms_growing;
    }
    rep.checks.push_back({"series_divergence_flag", all, all ? 1.0 : 0.0, 1.0,
                          "terms_growing set at interference ratio 5 and 10"});
  }
  {
    const double c_p = pu_capacity_alone(prm).value;
    const auto q = pu_capacity_with_su_exact(prm, 1e-12);
    const double d = std::fabs(q.value - c_p);
    rep.checks.push_back({"degenerate_pu_at_zero_power", d <= 1e-9, d, 1e-9,
                          "|quadrature(p_s = 1e-12) - C_P|"});
    const auto m0 = mc_pu_capacity(prm, 0.0, opts.samples, opts.seed);
    const double z = std::fabs(m0.mean - c_p) / m0.std_err;
    rep.checks.push_back({"degenerate_pu_mc_at_zero_power", z <= 3.0, z, 3.0,
                          "|mc(p_s = 0) - C_P| / std_err"});
    const double s0 = mc_su_capacity(prm, 0.0, opts.samples, opts.seed).mean;
    rep.checks.push_back({"degenerate_su_mc_at_zero_power", s0 == 0.0, s0, 0.0, "mc SU mean at p_s = 0"});
  }
  {
    const Constraints cons = scenario.constraints();
    const double p = mvpa_power(prm, cons).p_s;
    const auto m = mc_outage(prm, p, cons.i_th(), opts.samples, opts.seed);
    const double z = std::fabs(m.mean - cons.p_out()) / m.std_err;
    rep.checks.push_back({"mvpa_outage_vs_mc", z <= 3.0, z, 3.0,
                          "|empirical outage - p_out| / std_err at the MVPA power"});
  }
  return rep;
}

}  // namespace cogcap
