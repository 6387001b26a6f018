// cogcap: capacities, power allocation, Monte Carlo and figure data for a
// spectrum-sharing link pair under Rayleigh fading.
//
// Exit codes: 0 ok, 2 invalid input, 3 numerical failure, 4 invariant violation.
// Every flag can also be given as an environment variable COGCAP_<FLAG>, e.g.
// COGCAP_SEED=7 or COGCAP_SCENARIO=run.json; the command line wins.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cogcap/allocation.hpp"
#include "cogcap/capacity.hpp"
#include "cogcap/error.hpp"
#include "cogcap/figures.hpp"
#include "cogcap/montecarlo.hpp"
#include "cogcap/scenario.hpp"
#include "cogcap/validate.hpp"

namespace {

using namespace cogcap;
using nlohmann::json;

constexpr int kInvalidInput = 2;
constexpr int kNumerical = 3;
constexpr int kInvariant = 4;

struct Common {
  std::string scenario_path;
  std::optional<double> gamma_p;
  std::optional<double> gamma_sp;
  std::uint64_t seed = 42;
  bool db = false;
  bool bits = false;
};

Scenario load(const Common& c) {
  Scenario s = c.scenario_path.empty() ? default_scenario() : load_scenario(c.scenario_path);
  if (c.gamma_p) s.params = s.params.with_gamma_p(*c.gamma_p);
  if (c.gamma_sp) {
    auto f = s.params.fields();
    f.hbar1 = *c.gamma_sp * f.n_s / f.p_p;
    s.params = SystemParams(f);
  }
  return s;
}

LossMode parse_mode(const std::string& m) {
  if (m == "exact") return LossMode::exact;
  if (m == "approx") return LossMode::approx;
  if (m == "bound") return LossMode::bound;
  throw DomainError("unknown mode '" + m + "' (exact|approx|bound)");
}

double cap_units(const Common& c, double nats) { return c.bits ? nats / std::numbers::ln2 : nats; }

json capacity_json(const Common& c, const CapacityResult& r) {
  return {{"value", cap_units(c, r.value)},
          {"err_est", cap_units(c, r.err_est)},
          {"method", std::string(to_string(r.method))}};
}

void add_power(const Common& c, json& j, const char* key, double p) {
  j[key] = p;
  if (c.db) j[std::string(key) + "_db"] = 10.0 * std::log10(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ergodic capacity and power allocation for a primary/secondary link pair"};
  app.require_subcommand(1);
  app.set_version_flag("--version", COGCAP_VERSION);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--scenario", common.scenario_path, "Scenario JSON (linear units)")
        ->envname("COGCAP_SCENARIO");
    sub->add_option("--gamma-p", common.gamma_p, "Override gamma_p (scales P_P)")
        ->envname("COGCAP_GAMMA_P");
    sub->add_option("--gamma-sp", common.gamma_sp, "Override gamma_sp (sets hbar1)")
        ->envname("COGCAP_GAMMA_SP");
    sub->add_option("--seed", common.seed, "Monte Carlo seed")->envname("COGCAP_SEED");
    sub->add_flag("--db", common.db, "Also report powers in dB")->envname("COGCAP_DB");
    sub->add_flag("--bits", common.bits, "Report capacities in bits instead of nats")
        ->envname("COGCAP_BITS");
  };

  // figure
  auto* fig = app.add_subcommand("figure", "Write the CSV data of one figure");
  add_common(fig);
  std::string fig_id;
  std::string fig_out;
  std::optional<int> fig_points;
  std::optional<double> fig_min;
  std::optional<double> fig_max;
  std::uint64_t fig_samples = 100'000;
  std::string fig_mode = "exact";
  bool fig_strict = false;
  fig->add_option("id", fig_id, "Figure id")->required();
  fig->add_option("--out", fig_out, "Output CSV (default <id>.csv)")->envname("COGCAP_OUT");
  fig->add_option("--points", fig_points, "Sweep points")->envname("COGCAP_POINTS");
  fig->add_option("--min", fig_min, "Sweep start");
  fig->add_option("--max", fig_max, "Sweep end");
  fig->add_option("--samples", fig_samples, "Monte Carlo samples per point")
      ->envname("COGCAP_SAMPLES");
  fig->add_option("--mode", fig_mode, "Loss evaluation used by the loss-based scheme")
      ->envname("COGCAP_MODE");
  fig->add_flag("--strict", fig_strict, "Exit 4 if a figure check fails");

  // capacity
  auto* cap = app.add_subcommand("capacity", "Ergodic capacity of the SU or PU link");
  add_common(cap);
  std::string cap_who;
  double cap_ps = 1.0;
  int cap_kmax = 60;
  std::uint64_t cap_samples = 1'000'000;
  cap->add_option("user", cap_who, "su | pu")->required()->check(CLI::IsMember({"su", "pu"}));
  cap->add_option("--p-s", cap_ps, "SU transmit power (linear)")->envname("COGCAP_P_S");
  cap->add_option("--k-max", cap_kmax, "Series truncation (SU only)");
  cap->add_option("--samples", cap_samples, "Monte Carlo samples")->envname("COGCAP_SAMPLES");

  // allocate
  auto* alloc = app.add_subcommand("allocate", "SU power under an outage or loss constraint");
  add_common(alloc);
  std::string alloc_scheme;
  std::optional<double> alloc_target;
  std::string alloc_mode = "exact";
  bool alloc_absolute = false;
  alloc->add_option("scheme", alloc_scheme, "outage | loss")
      ->required()
      ->check(CLI::IsMember({"outage", "loss"}));
  alloc->add_option("--target", alloc_target,
                    "p_out (outage) or loss target (loss); defaults from the scenario");
  alloc->add_option("--mode", alloc_mode, "exact | approx | bound")->envname("COGCAP_MODE");
  alloc->add_flag("--absolute", alloc_absolute, "Loss target in nats instead of a fraction of C_P");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimates at one SU power");
  add_common(sim);
  std::optional<double> sim_ps;
  std::uint64_t sim_samples = 1'000'000;
  std::string sim_exec = "parallel";
  sim->add_option("--p-s", sim_ps, "SU power (default: MVPA power)")->envname("COGCAP_P_S");
  sim->add_option("--samples", sim_samples, "Samples")->envname("COGCAP_SAMPLES");
  sim->add_option("--execution", sim_exec, "parallel | serial")
      ->check(CLI::IsMember({"parallel", "serial"}));

  // validate
  auto* val = app.add_subcommand("validate", "Run the cross-validation suite");
  add_common(val);
  std::uint64_t val_samples = 1'000'000;
  std::optional<double> val_inject;
  val->add_option("--samples", val_samples, "Monte Carlo samples")->envname("COGCAP_SAMPLES");
  val->add_option("--inject-upper-c", val_inject, "Test hook: replace the upper bound's c")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalidInput;
  }

  try {
    const Scenario sc = load(common);

    if (*fig) {
      FigureSpec spec = default_figure(parse_figure_id(fig_id));
      if (fig_points) spec.sweep.points = *fig_points;
      if (fig_min) spec.sweep.min = *fig_min;
      if (fig_max) spec.sweep.max = *fig_max;
      FigureOptions o;
      o.seed = common.seed;
      o.samples = fig_samples;
      o.alloc_mode = parse_mode(fig_mode);
      const std::filesystem::path out = fig_out.empty() ? fig_id + ".csv" : fig_out;
      const FigureTable t = run_figure(spec, sc, out, o);
      std::cerr << "wrote " << t.rows.size() << " rows to " << out.string() << '\n';
      bool ok = true;
      for (const auto& c : t.checks) {
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << " measured=" << c.measured
                  << '\n';
        ok = ok && c.passed;
      }
      return (fig_strict && !ok) ? kInvariant : 0;
    }

    if (*cap) {
      const auto& p = sc.params;
      json j{{"user", cap_who}, {"units", common.bits ? "bits/s/Hz" : "nats/s/Hz"}};
      add_power(common, j, "p_s", cap_ps);
      if (cap_who == "su") {
        j["exact"] = capacity_json(common, su_capacity_exact(p, cap_ps));
        const auto b = su_capacity_bounds(p, cap_ps);
        j["lower"] = capacity_json(common, b.lower);
        j["upper"] = capacity_json(common, b.upper);
        j["no_interference"] = capacity_json(common, su_capacity_no_interference(p, cap_ps));
        const auto s = su_capacity_series(p, cap_ps, cap_kmax);
        j["series"] = capacity_json(common, s.result);
        j["series"]["terms"] = s.terms;
        j["series"]["converged"] = s.converged;
        j["series"]["terms_growing"] = s.terms_growing;
        const auto m = mc_su_capacity(p, cap_ps, cap_samples, common.seed);
        j["monte_carlo"] = {{"mean", cap_units(common, m.mean)},
                            {"std_err", cap_units(common, m.std_err)}, {"n", m.n}};
      } else {
        j["alone"] = capacity_json(common, pu_capacity_alone(p));
        j["exact"] = capacity_json(common, pu_capacity_with_su_exact(p, cap_ps));
        const auto b = pu_capacity_with_su_bounds(p, cap_ps);
        j["lower"] = capacity_json(common, b.lower);
        j["upper"] = capacity_json(common, b.upper);
        j["approx"] = capacity_json(common, pu_capacity_with_su_approx(p, cap_ps));
        const auto m = mc_pu_capacity(p, cap_ps, cap_samples, common.seed);
        j["monte_carlo"] = {{"mean", cap_units(common, m.mean)},
                            {"std_err", cap_units(common, m.std_err)}, {"n", m.n}};
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*alloc) {
      const auto& p = sc.params;
      json j{{"scheme", alloc_scheme}};
      if (alloc_scheme == "outage") {
        const Constraints base = sc.constraints();
        const Constraints cons(base.i_th(), alloc_target.value_or(base.p_out()));
        const auto r = mvpa_power(p, cons);
        add_power(common, j, "p_s", r.p_s);
        j["i_th"] = cons.i_th();
        j["p_out"] = cons.p_out();
      } else {
        const double target = alloc_target ? *alloc_target
                              : sc.loss_frac
                                  ? *sc.loss_frac
                                  : throw DomainError("loss target missing: pass --target or set "
                                                      "loss_frac in the scenario");
        LossSearchOptions o;
        o.target = alloc_absolute ? LossTarget::absolute : LossTarget::relative;
        const auto r = loss_based_power(p, target, parse_mode(alloc_mode), o);
        add_power(common, j, "p_s", r.p_s);
        j["mode"] = alloc_mode;
        j["target"] = target;
        j["achieved"] = r.achieved_metric;
        j["iterations"] = r.iterations;
        j["outage_probability"] = outage_probability(p, r.p_s, sc.constraints().i_th());
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*sim) {
      const auto& p = sc.params;
      const Constraints cons = sc.constraints();
      const double p_s = sim_ps.value_or(mvpa_power(p, cons).p_s);
      const Execution ex = sim_exec == "serial" ? Execution::serial : Execution::parallel;
      auto est = [&](const MonteCarloEstimate& m, bool capacity) {
        return json{{"mean", capacity ? cap_units(common, m.mean) : m.mean},
                    {"std_err", capacity ? cap_units(common, m.std_err) : m.std_err}};
      };
      json j{{"seed", common.seed}, {"n", sim_samples}, {"rng", kRngAlgorithm},
             {"execution", std::string(to_string(ex))}};
      add_power(common, j, "p_s", p_s);
      j["su_capacity"] = est(mc_su_capacity(p, p_s, sim_samples, common.seed, ex), true);
      j["pu_capacity"] = est(mc_pu_capacity(p, p_s, sim_samples, common.seed, ex), true);
      j["outage"] = est(mc_outage(p, p_s, cons.i_th(), sim_samples, common.seed, ex), false);
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*val) {
      ValidateOptions o;
      o.samples = val_samples;
      o.seed = common.seed;
      o.inject_upper_c = val_inject;
      const Report r = validate(sc, o);
      print_report(std::cout, r);
      return r.passed() ? 0 : kInvariant;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InfeasibleTarget& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return 0;
}
