#ifndef COGCAP_QUADRATURE_HPP
#define COGCAP_QUADRATURE_HPP

#include <functional>

namespace cogcap::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;   // estimated absolute error
  int intervals = 0;        // subintervals in the final partition
  int evaluations = 0;      // integrand evaluations
};

struct Options {
  double abs_tol = 1e-9;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
/// Throws ConvergenceError if the tolerance is not met within max_intervals.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

/// Integral over [0, inf) of f(u) e^{-u} for a positive, non-increasing f.
///
/// The range is truncated at U where f(0) e^{-U} < 1e-16 of a cheap lower
/// bound of the integral; the neglected tail is added to abs_error.
Result integrate_exp_weight(const std::function<double(double)>& f,
                            const Options& opts = {});

}  // namespace cogcap::quad

#endif
