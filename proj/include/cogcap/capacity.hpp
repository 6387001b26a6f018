#ifndef COGCAP_CAPACITY_HPP
#define COGCAP_CAPACITY_HPP

//
// Ergodic capacity evaluators for the secondary (SU) and primary (PU) links.
// All values are in nats/s/Hz.
//
// Both exact capacities reduce to the same one-dimensional family
//
//     I(a, r) = E[ e^{a + r U} Gamma(0, a + r U) ],   U ~ Exp(1),
//
// with, for the SU,  a = N_S / (gbar1 P_s),      r = P_P hbar1 / (gbar1 P_s)
// and, for the PU,   a = N_P / (hbar0 P_P),      r = P_s gbar0 / (hbar0 P_P).
//
// Replacing e^x Gamma(0, x) by its unified bound c ln(1 + 1/(c x)) gives the
// closed forms; c = 0.5 bounds from below and c = 1 from above.
//

#include <string_view>

#include "cogcap/model.hpp"
#include "cogcap/quadrature.hpp"
#include "cogcap/specfun.hpp"

namespace cogcap {

enum class Method { quadrature, series, bound_lower, bound_upper, approx, monte_carlo, closed_form };

std::string_view to_string(Method m) noexcept;

struct CapacityResult {
  double value = 0.0;
  Method method = Method::closed_form;
  double err_est = 0.0;  // absolute error estimate (or standard error for MC)
};

struct BoundPair {
  CapacityResult lower;
  CapacityResult upper;
  specfun::BoundParam lower_c = specfun::BoundParam::lower();
  specfun::BoundParam upper_c = specfun::BoundParam::upper();
};

/// Partial sum of the Laguerre-expansion form of the SU capacity.
struct SeriesResult {
  CapacityResult result;       // err_est = |last term group|
  int terms = 0;               // term groups summed (k = 0..k_max)
  bool terms_growing = false;  // 3 consecutive |T_k| above every earlier |T_j|, j >= 1
  double tail_estimate = 0.0;  // geometric extrapolation of the remaining terms
  bool converged = false;      // !terms_growing && tail_estimate <= tolerance
};

enum class LossMode { exact, bound, approx };

// --- secondary user --------------------------------------------------------

/// E over g1, h1 of ln(1 + g1 P_s / (P_P h1 + N_S)) by adaptive quadrature.
CapacityResult su_capacity_exact(const SystemParams& params, double p_s,
                                 const quad::Options& opts = {});

/// Sum over k <= k_max of T_k = (1/(k+1)) sum_m (-1)^m C(k,m) r^m e^s Gamma(m+1, s) / m!
/// with r = P_P hbar1 / (gbar1 P_s) and s = N_S / (P_P hbar1), i.e. the
/// expansion e^x Gamma(0, x) = sum_k L_k(x) / (k+1) averaged over the
/// interference.  L_k is the standard Laguerre polynomial, sum_m (-1)^m C(k,m) x^m / m!.
///
/// The expansion converges only algebraically for r < 2 (oscillating
/// terms of order k^{-7/4}) and diverges geometrically for r > 2, so check
/// `converged` before trusting the value.
SeriesResult su_capacity_series(const SystemParams& params, double p_s, int k_max,
                                double tolerance = 1e-5);

CapacityResult su_capacity_bound(const SystemParams& params, double p_s, specfun::BoundParam c);
BoundPair su_capacity_bounds(const SystemParams& params, double p_s);

/// SU capacity when the PU is silent: e^x Gamma(0, x), x = N_S / (gbar1 P_s).
CapacityResult su_capacity_no_interference(const SystemParams& params, double p_s);

// --- primary user ----------------------------------------------------------

/// C_P = e^x Gamma(0, x) with x = 1 / gamma_p.
CapacityResult pu_capacity_alone(const SystemParams& params);

/// PU capacity with SU interference; p_s = 0 returns pu_capacity_alone.
CapacityResult pu_capacity_with_su_exact(const SystemParams& params, double p_s,
                                         const quad::Options& opts = {});

CapacityResult pu_capacity_with_su_bound(const SystemParams& params, double p_s,
                                         specfun::BoundParam c);
BoundPair pu_capacity_with_su_bounds(const SystemParams& params, double p_s);

/// Closed-form approximation built on the mean of the two bounds.
CapacityResult pu_capacity_with_su_approx(const SystemParams& params, double p_s);

/// C_P minus the selected with-SU capacity.  `c` is used by LossMode::bound.
///
/// In bound and approx modes the loss does not vanish at p_s = 0: it tends to
/// C_P - c ln(1 + gamma_p / c) and C_P - 0.5[ln(1 + gamma_p) + 0.5 ln(1 + 2 gamma_p)]
/// respectively, which can be of either sign.  Only exact mode is 0 there.
CapacityResult pu_capacity_loss(const SystemParams& params, double p_s, LossMode mode,
                                specfun::BoundParam c = specfun::BoundParam::upper());

/// Loss as p_s -> 0 for the given mode (0 for exact mode).
double pu_capacity_loss_floor(const SystemParams& params, LossMode mode,
                              specfun::BoundParam c = specfun::BoundParam::upper());

// --- both ------------------------------------------------------------------

/// SU exact + PU-with-SU exact at the same p_s (p_s = 0 gives C_P).
CapacityResult sum_capacity(const SystemParams& params, double p_s,
                            const quad::Options& opts = {});

}  // namespace cogcap

#endif
