#ifndef COGCAP_FIGURES_HPP
#define COGCAP_FIGURES_HPP

//
// Figure-data reproduction.  Each figure is a sweep of one variable with a
// list of series; the result is written as CSV preceded by a '#' metadata
// block (tool version, scenario hash, seed, sample count, RNG algorithm).
// Cells that have no value (an infeasible loss target) are written as "nan".
//

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogcap/capacity.hpp"
#include "cogcap/scenario.hpp"
#include "cogcap/validate.hpp"

namespace cogcap {

enum class FigureId {
  bounds_x,     // e^x Gamma(0, x) and its two bounds
  c_su,         // SU capacity vs gamma_p (gamma_sp held fixed), I_th = fraction * gamma_p
  c_pu_su,      // PU capacity vs interference outage probability
  c_pu_apprx,   // PU capacity: exact, bounds, approximation vs P_s
  pu_closs,     // PU capacity loss vs P_s
  s_pow_closs,  // loss-based SU power vs loss percentage
  c_sim_loss,   // SU and PU capacity under the loss-based scheme
  loss_outage,  // outage probability implied by a loss target
  sum_cap,      // sum capacity of both schemes
};

std::string_view to_string(FigureId id) noexcept;
/// Throws DomainError for an unknown id.
FigureId parse_figure_id(std::string_view name);
std::vector<FigureId> all_figures();

enum class SweepVar { x, gamma_p_link, p_out, p_s, loss_frac, constraint };
enum class Scale { linear, log };

struct Sweep {
  SweepVar variable = SweepVar::x;
  double min = 0.0;
  double max = 1.0;
  int points = 2;
  Scale scale = Scale::linear;

  std::vector<double> values() const;
};

enum class Evaluator {
  exg0_exact, exg0_lower, exg0_upper,
  p_s,  // transmit power the sweep point implies
  su_no_pu, su_exact, su_lower, su_upper, su_mc, su_mc_se,
  pu_alone, pu_exact, pu_lower, pu_upper, pu_approx, pu_mc, pu_mc_se,
  loss_exact, loss_approx, loss_exact_rel, loss_approx_rel,
  p_s_loss_exact, p_s_loss_approx,
  outage,
  sum_outage, sum_loss,
};

struct Series {
  std::string label;
  Evaluator evaluator;
  std::optional<double> gamma_p;  // override: PU power set for this gamma_p
  bool db_column = false;         // also emit 10 log10(value)
};

struct FigureSpec {
  FigureId id = FigureId::bounds_x;
  Sweep sweep;
  std::vector<Series> series;
};

/// The default sweep and series for a figure.
FigureSpec default_figure(FigureId id);

struct FigureOptions {
  std::uint64_t seed = 42;
  std::uint64_t samples = 100'000;
  LossMode alloc_mode = LossMode::exact;  // evaluation mode of the loss-based scheme
};

struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<Check> checks;  // only sum_cap produces checks
};

FigureTable compute_figure(const FigureSpec& spec, const Scenario& scenario,
                           const FigureOptions& opts = {});

void write_csv(std::ostream& os, const FigureSpec& spec, const Scenario& scenario,
               const FigureOptions& opts, const FigureTable& table);

/// compute_figure + write_csv to `out_path`.  Throws std::runtime_error on I/O failure.
FigureTable run_figure(const FigureSpec& spec, const Scenario& scenario,
                       const std::filesystem::path& out_path, const FigureOptions& opts = {});

}  // namespace cogcap

#endif
