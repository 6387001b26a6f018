#include "cogcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cogcap/detail/summation.hpp"
#include "cogcap/error.hpp"

namespace cogcap {

using specfun::BoundParam;
using specfun::exg0;

namespace {

void require_positive_power(double p_s, const char* who) {
  if (!(p_s > 0.0) || !std::isfinite(p_s)) {
    throw DomainError(std::string(who) + ": p_s must be positive and finite");
  }
}

void require_nonnegative_power(double p_s, const char* who) {
  if (!(p_s >= 0.0) || !std::isfinite(p_s)) {
    throw DomainError(std::string(who) + ": p_s must be non-negative and finite");
  }
}

Method bound_method(BoundParam c) {
  return c.value() >= 1.0 ? Method::bound_upper : Method::bound_lower;
}

// E[e^x Gamma(0, x)] over x = a + r U, U ~ Exp(1).
CapacityResult exg0_exponential_average(double a, double r, const quad::Options& opts) {
  const auto res = quad::integrate_exp_weight([a, r](double u) { return exg0(a + r * u); }, opts);
  return {res.value, Method::quadrature, res.abs_error};
}

// Closed form of E[c ln(1 + S/(c (I Z + N)))] for Z ~ Exp(1):
//   c ln(1 + S/(c N)) - c [exg0(N / I) - exg0((S/c + N) / I)].
double unified_bound(double signal, double noise, double interference, double c) {
  return c * std::log1p(signal / (c * noise)) -
         c * (exg0(noise / interference) - exg0((signal / c + noise) / interference));
}

// Mean of the c = 1 and c = 0.5 closed forms, expanded term by term.
double mean_bound_approx(double signal, double noise, double interference) {
  return 0.5 * (std::log1p(signal / noise) - 1.5 * exg0(noise / interference) +
                exg0((signal + noise) / interference) + 0.5 * std::log1p(2.0 * signal / noise) +
                0.5 * exg0((2.0 * signal + noise) / interference));
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::series: return "series";
    case Method::bound_lower: return "bound_lower";
    case Method::bound_upper: return "bound_upper";
    case Method::approx: return "approx";
    case Method::monte_carlo: return "monte_carlo";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Secondary user
// ---------------------------------------------------------------------------

CapacityResult su_capacity_exact(const SystemParams& params, double p_s,
                                 const quad::Options& opts) {
  require_positive_power(p_s, "su_capacity_exact");
  const double signal = params.gbar1() * p_s;
  return exg0_exponential_average(params.n_s() / signal, params.p_p() * params.hbar1() / signal,
                                  opts);
}

SeriesResult su_capacity_series(const SystemParams& params, double p_s, int k_max,
                                double tolerance) {
  require_positive_power(p_s, "su_capacity_series");
  if (k_max < 0) throw DomainError("su_capacity_series: k_max must be >= 0");

  const double interference = params.p_p() * params.hbar1();
  const double ratio = interference / (params.gbar1() * p_s);
  const double a = params.n_s() / (params.gbar1() * p_s);

  // T_k = c_k / (k + 1) with c_k = (1 - r) c_{k-1} + L_k(a) - L_{k-1}(a), the
  // coefficients of exp(-a t / (1 - t)) / (1 - (1 - r) t).  This equals the
  // binomial double sum term by term but avoids its (1 + r)^k cancellation.
  SeriesResult out;
  std::vector<double> magnitudes;
  magnitudes.reserve(static_cast<std::size_t>(k_max) + 1);
  detail::CompensatedSum total;
  int rising = 0;
  double record = 0.0;
  double last = 0.0;
  double c = 0.0;
  double l_prev = 0.0;  // L_{k-1}(a), with L_{-1} = 0
  double l_cur = 1.0;   // L_k(a)

  for (int k = 0; k <= k_max; ++k) {
    c = (1.0 - ratio) * c + (l_cur - l_prev);
    last = c / static_cast<double>(k + 1);
    total.add(last);
    const double kd = static_cast<double>(k);
    const double l_next = ((2.0 * kd + 1.0 - a) * l_cur - kd * l_prev) / (kd + 1.0);
    l_prev = l_cur;
    l_cur = l_next;

    // The convergent envelope oscillates, so plain increases are common; a
    // run of new records above every earlier |T_j|, j >= 1, is not.
    const double mag = std::fabs(last);
    if (!std::isfinite(mag)) {
      out.terms_growing = true;
    } else if (k >= 2 && mag > record) {
      if (++rising >= 3) out.terms_growing = true;
    } else {
      rising = 0;
    }
    if (k >= 1) record = std::max(record, mag);
    magnitudes.push_back(mag);
  }

  out.terms = k_max + 1;
  out.result = {total.value(), Method::series, std::fabs(last)};

  // Envelope decay over the last two windows of ten terms.
  out.tail_estimate = std::numeric_limits<double>::infinity();
  if (k_max >= 19 && !out.terms_growing) {
    const auto end = magnitudes.end();
    const double recent = *std::max_element(end - 10, end);
    const double earlier = *std::max_element(end - 20, end - 10);
    if (recent == 0.0) {
      out.tail_estimate = 0.0;
    } else if (earlier > 0.0 && recent < earlier) {
      const double rho = std::pow(recent / earlier, 0.1);
      out.tail_estimate = recent * rho / (1.0 - rho);
    }
  }
  out.converged = !out.terms_growing && out.tail_estimate <= tolerance;
  return out;
}

CapacityResult su_capacity_bound(const SystemParams& params, double p_s, BoundParam c) {
  require_positive_power(p_s, "su_capacity_bound");
  const double v = unified_bound(params.gbar1() * p_s, params.n_s(),
                                 params.p_p() * params.hbar1(), c.value());
  return {v, bound_method(c), 0.0};
}

BoundPair su_capacity_bounds(const SystemParams& params, double p_s) {
  return {su_capacity_bound(params, p_s, BoundParam::lower()),
          su_capacity_bound(params, p_s, BoundParam::upper())};
}

CapacityResult su_capacity_no_interference(const SystemParams& params, double p_s) {
  require_positive_power(p_s, "su_capacity_no_interference");
  return {exg0(params.n_s() / (params.gbar1() * p_s)), Method::closed_form, 0.0};
}

// ---------------------------------------------------------------------------
// Primary user
// ---------------------------------------------------------------------------

CapacityResult pu_capacity_alone(const SystemParams& params) {
  return {exg0(1.0 / params.gamma_p()), Method::closed_form, 0.0};
}

CapacityResult pu_capacity_with_su_exact(const SystemParams& params, double p_s,
                                         const quad::Options& opts) {
  require_nonnegative_power(p_s, "pu_capacity_with_su_exact");
  if (p_s == 0.0) return pu_capacity_alone(params);
  const double signal = params.hbar0() * params.p_p();
  return exg0_exponential_average(params.n_p() / signal, p_s * params.gbar0() / signal, opts);
}

CapacityResult pu_capacity_with_su_bound(const SystemParams& params, double p_s, BoundParam c) {
  require_positive_power(p_s, "pu_capacity_with_su_bound");
  const double v = unified_bound(params.hbar0() * params.p_p(), params.n_p(),
                                 p_s * params.gbar0(), c.value());
  return {v, bound_method(c), 0.0};
}

BoundPair pu_capacity_with_su_bounds(const SystemParams& params, double p_s) {
  return {pu_capacity_with_su_bound(params, p_s, BoundParam::lower()),
          pu_capacity_with_su_bound(params, p_s, BoundParam::upper())};
}

CapacityResult pu_capacity_with_su_approx(const SystemParams& params, double p_s) {
  require_positive_power(p_s, "pu_capacity_with_su_approx");
  const double v =
      mean_bound_approx(params.hbar0() * params.p_p(), params.n_p(), p_s * params.gbar0());
  return {v, Method::approx, 0.0};
}

double pu_capacity_loss_floor(const SystemParams& params, LossMode mode, BoundParam c) {
  const double c_p = pu_capacity_alone(params).value;
  const double g = params.gamma_p();
  switch (mode) {
    case LossMode::exact: return 0.0;
    case LossMode::bound: return c_p - c.value() * std::log1p(g / c.value());
    case LossMode::approx: return c_p - 0.5 * (std::log1p(g) + 0.5 * std::log1p(2.0 * g));
  }
  return 0.0;
}

CapacityResult pu_capacity_loss(const SystemParams& params, double p_s, LossMode mode,
                                BoundParam c) {
  require_nonnegative_power(p_s, "pu_capacity_loss");
  const double c_p = pu_capacity_alone(params).value;
  if (p_s == 0.0) {
    const Method m = mode == LossMode::exact   ? Method::closed_form
                     : mode == LossMode::bound ? bound_method(c)
                                               : Method::approx;
    return {pu_capacity_loss_floor(params, mode, c), m, 0.0};
  }
  CapacityResult with_su;
  switch (mode) {
    case LossMode::exact: with_su = pu_capacity_with_su_exact(params, p_s); break;
    case LossMode::bound: with_su = pu_capacity_with_su_bound(params, p_s, c); break;
    case LossMode::approx: with_su = pu_capacity_with_su_approx(params, p_s); break;
  }
  return {c_p - with_su.value, with_su.method, with_su.err_est};
}

CapacityResult sum_capacity(const SystemParams& params, double p_s, const quad::Options& opts) {
  require_nonnegative_power(p_s, "sum_capacity");
  if (p_s == 0.0) return pu_capacity_alone(params);
  const auto su = su_capacity_exact(params, p_s, opts);
  const auto pu = pu_capacity_with_su_exact(params, p_s, opts);
  return {su.value + pu.value, Method::quadrature, su.err_est + pu.err_est};
}

}  // namespace cogcap
