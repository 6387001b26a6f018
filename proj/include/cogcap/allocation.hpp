#ifndef COGCAP_ALLOCATION_HPP
#define COGCAP_ALLOCATION_HPP

#include <string_view>

#include "cogcap/capacity.hpp"
#include "cogcap/model.hpp"

namespace cogcap {

enum class Scheme { mvpa_outage, pu_loss };

std::string_view to_string(Scheme s) noexcept;

struct AllocationResult {
  double p_s = 0.0;
  Scheme scheme = Scheme::mvpa_outage;
  double achieved_metric = 0.0;  // outage probability, or loss (relative or absolute)
  int iterations = 0;
};

/// Mean-value power allocation: the largest fixed P_s meeting
/// Pr{g0 P_s > I_th} <= p_out, i.e. I_th / (gbar0 ln(1/p_out)).
AllocationResult mvpa_power(const SystemParams& params, const Constraints& cons);

/// Pr{g0 P_s > I_th} = exp(-I_th / (gbar0 P_s)); 0 for P_s = 0.
double outage_probability(const SystemParams& params, double p_s, double i_th);

enum class LossTarget {
  relative,  // target is a fraction of C_P
  absolute,  // target is in nats/s/Hz
};

struct LossSearchOptions {
  LossTarget target = LossTarget::relative;
  double tolerance = 1e-6;  // on |achieved - target|
  int max_iterations = 200;
  double p_hi_cap = 1e6;
};

/// Smallest-bracket bisection for the P_s whose PU capacity loss (evaluated in
/// `mode`) equals `loss_frac`.  The lower end starts at P_s = 0, the upper end
/// starts at N_P / gbar0 and doubles until the loss exceeds the target.
///
/// Throws InfeasibleTarget when the target is at or below the loss the chosen
/// mode already reports at P_s -> 0 (nonzero in approx mode), and
/// BracketFailure when the upper end passes p_hi_cap without crossing.
AllocationResult loss_based_power(const SystemParams& params, double loss_frac, LossMode mode,
                                  const LossSearchOptions& opts = {});

/// Interference outage probability implied by the loss-based allocation for
/// `loss_frac`, with the threshold taken from `cons`.
double loss_to_outage(const SystemParams& params, const Constraints& cons, double loss_frac,
                      LossMode mode, const LossSearchOptions& opts = {});

}  // namespace cogcap

#endif
