#include "cogcap/allocation.hpp"

#include <cmath>
#include <string>

#include "cogcap/error.hpp"

namespace cogcap {

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::mvpa_outage: return "mvpa_outage";
    case Scheme::pu_loss: return "pu_loss";
  }
  return "unknown";
}

AllocationResult mvpa_power(const SystemParams& params, const Constraints& cons) {
  // Constraints already guarantees 0 < p_out < 1 and i_th > 0.
  const double p_s = cons.i_th() / (params.gbar0() * std::log(1.0 / cons.p_out()));
  return {p_s, Scheme::mvpa_outage, cons.p_out(), 0};
}

double outage_probability(const SystemParams& params, double p_s, double i_th) {
  if (!(p_s >= 0.0) || !std::isfinite(p_s)) {
    throw DomainError("outage_probability: p_s must be non-negative and finite");
  }
  if (!(i_th > 0.0)) throw DomainError("outage_probability: i_th must be positive");
  if (p_s == 0.0) return 0.0;
  return std::exp(-i_th / (params.gbar0() * p_s));
}

AllocationResult loss_based_power(const SystemParams& params, double loss_frac, LossMode mode,
                                  const LossSearchOptions& opts) {
  if (!(loss_frac > 0.0) || !std::isfinite(loss_frac) ||
      (opts.target == LossTarget::relative && !(loss_frac < 1.0))) {
    throw DomainError("loss_based_power: target must lie in (0, 1) (relative) or be positive");
  }
  const double c_p = pu_capacity_alone(params).value;
  const double scale = opts.target == LossTarget::relative ? c_p : 1.0;
  auto metric = [&](double p_s) { return pu_capacity_loss(params, p_s, mode).value / scale; };

  const double floor = pu_capacity_loss_floor(params, mode) / scale;
  if (loss_frac <= floor) {
    throw InfeasibleTarget("loss_based_power: target " + std::to_string(loss_frac) +
                               " is not above the p_s -> 0 loss " + std::to_string(floor) +
                               " of this evaluation mode",
                           floor);
  }

  double lo = 0.0;
  double hi = params.n_p() / params.gbar0();
  int iterations = 0;
  for (double m = metric(hi); m <= loss_frac; m = metric(hi)) {
    ++iterations;
    lo = hi;
    hi *= 2.0;
    if (hi > opts.p_hi_cap) {
      throw BracketFailure("loss_based_power: loss stays below target up to p_s = " +
                           std::to_string(opts.p_hi_cap));
    }
  }

  for (int i = 0; i < opts.max_iterations; ++i) {
    ++iterations;
    const double mid = 0.5 * (lo + hi);
    const double m = metric(mid);
    if (std::fabs(m - loss_frac) < opts.tolerance) {
      return {mid, Scheme::pu_loss, m, iterations};
    }
    (m < loss_frac ? lo : hi) = mid;
  }
  throw ConvergenceError("loss_based_power: bisection did not reach the tolerance");
}

double loss_to_outage(const SystemParams& params, const Constraints& cons, double loss_frac,
                      LossMode mode, const LossSearchOptions& opts) {
  const auto alloc = loss_based_power(params, loss_frac, mode, opts);
  return outage_probability(params, alloc.p_s, cons.i_th());
}

}  // namespace cogcap
