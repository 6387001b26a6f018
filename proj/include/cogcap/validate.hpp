#ifndef COGCAP_VALIDATE_HPP
#define COGCAP_VALIDATE_HPP

//
// Cross-validation of the analytic evaluators against each other and against
// Monte Carlo, and the sum-capacity ordering checks.
//

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cogcap/capacity.hpp"
#include "cogcap/scenario.hpp"

namespace cogcap {

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed deviation or margin
  double threshold = 0.0;  // the limit it was compared against
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool passed() const;
  int failures() const;
};

void print_report(std::ostream& os, const Report& r);

/// Sum capacity of both schemes along a constraint grid at one gamma_p.
/// Entry i uses p_out = constraint[i] for the outage scheme and
/// loss_frac = constraint[i] for the loss scheme.
struct SumCapacityCurve {
  double gamma_p = 0.0;
  double c_p = 0.0;  // PU capacity without the SU
  std::vector<double> constraint;
  std::vector<double> sum_outage;
  std::vector<double> sum_loss;
  double tolerance = 0.0;  // combined quadrature error allowance
};

SumCapacityCurve sum_capacity_curve(const Scenario& scenario, double gamma_p,
                                    const std::vector<double>& constraint, LossMode alloc_mode);

/// Orderings reported for the two schemes:
///   (a) high SNR: sum < C_P for every p_s > 0
///   (b) high SNR: sum decreasing as constraints loosen
///   (c) low SNR:  sum increasing as constraints loosen
///   (d) loss scheme's sum >= outage scheme's sum at equal constraint value
std::vector<Check> sum_capacity_observations(const SumCapacityCurve& high_snr,
                                             const SumCapacityCurve& low_snr);

struct ValidateOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  /// Test hook: replaces c = 1 in the upper-bound slot of the sandwich checks
  /// (a value below 0.5 must make them fail).
  std::optional<double> inject_upper_c;
};

/// Runs the oracle suite for one scenario.
Report validate(const Scenario& scenario, const ValidateOptions& opts = {});

}  // namespace cogcap

#endif
