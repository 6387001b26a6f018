#include "cogcap/figures.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "cogcap/allocation.hpp"
#include "cogcap/error.hpp"
#include "cogcap/montecarlo.hpp"

namespace cogcap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::pair<FigureId, std::string_view> kNames[] = {
    {FigureId::bounds_x, "bounds_x"},       {FigureId::c_su, "c_su"},
    {FigureId::c_pu_su, "c_pu_su"},         {FigureId::c_pu_apprx, "c_pu_apprx"},
    {FigureId::pu_closs, "pu_closs"},       {FigureId::s_pow_closs, "s_pow_closs"},
    {FigureId::c_sim_loss, "c_sim_loss"},   {FigureId::loss_outage, "loss_outage"},
    {FigureId::sum_cap, "sum_cap"},
};

std::string_view sweep_name(SweepVar v) {
  switch (v) {
    case SweepVar::x: return "x";
    case SweepVar::gamma_p_link: return "gamma_p";
    case SweepVar::p_out: return "p_out";
    case SweepVar::p_s: return "p_s";
    case SweepVar::loss_frac: return "loss_frac";
    case SweepVar::constraint: return "constraint";
  }
  return "unknown";
}

bool sweep_has_db(const Sweep& s) {
  return s.scale == Scale::log && (s.variable == SweepVar::gamma_p_link || s.variable == SweepVar::p_s);
}

std::string gp_suffix(double gp) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_gp%g", gp);
  return buf;
}

std::vector<Series> per_gamma(const std::vector<double>& gammas,
                              const std::vector<std::tuple<std::string, Evaluator, bool>>& base) {
  std::vector<Series> out;
  for (double gp : gammas) {
    for (const auto& [label, ev, db] : base) out.push_back({label + gp_suffix(gp), ev, gp, db});
  }
  return out;
}

double to_db(double v) { return 10.0 * std::log10(v); }

// Everything one sweep point of one series needs.
struct Point {
  SystemParams params;
  Constraints cons;
  SweepVar var;
  double value;
};

class RowEvaluator {
public:
  RowEvaluator(const Scenario& sc, const Sweep& sweep, double value, const FigureOptions& opts)
      : sc_(sc), sweep_(sweep), value_(value), opts_(opts) {}

  double operator()(const Series& s) {
    try {
      return evaluate(s);
    } catch (const InfeasibleTarget&) {
      return kNaN;
    } catch (const BracketFailure&) {
      return kNaN;
    }
  }

private:
  Point point(const Series& s) const {
    SystemParams p = sc_.params;
    if (s.gamma_p) p = p.with_gamma_p(*s.gamma_p);
    if (sweep_.variable == SweepVar::gamma_p_link) p = p.with_gamma_p_link(value_);
    const Constraints base = sc_.constraints_for(p);
    if (sweep_.variable == SweepVar::p_out || sweep_.variable == SweepVar::constraint) {
      return {p, Constraints(base.i_th(), value_, base.loss_frac()), sweep_.variable, value_};
    }
    return {p, base, sweep_.variable, value_};
  }

  double loss_power(const SystemParams& p, double target, LossMode mode) const {
    return loss_based_power(p, target, mode).p_s;
  }

  double power(const Point& pt, Evaluator ev) const {
    switch (pt.var) {
      case SweepVar::p_s: return pt.value;
      case SweepVar::loss_frac: return loss_power(pt.params, pt.value, opts_.alloc_mode);
      case SweepVar::constraint:
        if (ev == Evaluator::sum_loss) return loss_power(pt.params, pt.value, opts_.alloc_mode);
        return mvpa_power(pt.params, pt.cons).p_s;
      case SweepVar::p_out:
      case SweepVar::gamma_p_link:
      case SweepVar::x: return mvpa_power(pt.params, pt.cons).p_s;
    }
    return kNaN;
  }

  const MonteCarloEstimate& mc(bool su, const Series& s, const Point& pt, double p) {
    const auto key = std::make_tuple(su, s.gamma_p.value_or(0.0), p);
    auto it = mc_cache_.find(key);
    if (it == mc_cache_.end()) {
      const auto est = su ? mc_su_capacity(pt.params, p, opts_.samples, opts_.seed)
                          : mc_pu_capacity(pt.params, p, opts_.samples, opts_.seed);
      it = mc_cache_.emplace(key, est).first;
    }
    return it->second;
  }

  double evaluate(const Series& s) {
    using specfun::BoundParam;
    switch (s.evaluator) {
      case Evaluator::exg0_exact: return specfun::exg0(value_);
      case Evaluator::exg0_lower: return specfun::exg0_bound(value_, BoundParam::lower());
      case Evaluator::exg0_upper: return specfun::exg0_bound(value_, BoundParam::upper());
      default: break;
    }
    const Point pt = point(s);
    const SystemParams& prm = pt.params;
    switch (s.evaluator) {
      case Evaluator::p_s: return power(pt, s.evaluator);
      case Evaluator::su_no_pu: return su_capacity_no_interference(prm, power(pt, s.evaluator)).value;
      case Evaluator::su_exact: return su_capacity_exact(prm, power(pt, s.evaluator)).value;
      case Evaluator::su_lower:
        return su_capacity_bound(prm, power(pt, s.evaluator), BoundParam::lower()).value;
      case Evaluator::su_upper:
        return su_capacity_bound(prm, power(pt, s.evaluator), BoundParam::upper()).value;
      case Evaluator::su_mc: return mc(true, s, pt, power(pt, s.evaluator)).mean;
      case Evaluator::su_mc_se: return mc(true, s, pt, power(pt, s.evaluator)).std_err;
      case Evaluator::pu_alone: return pu_capacity_alone(prm).value;
      case Evaluator::pu_exact: return pu_capacity_with_su_exact(prm, power(pt, s.evaluator)).value;
      case Evaluator::pu_lower:
        return pu_capacity_with_su_bound(prm, power(pt, s.evaluator), BoundParam::lower()).value;
      case Evaluator::pu_upper:
        return pu_capacity_with_su_bound(prm, power(pt, s.evaluator), BoundParam::upper()).value;
      case Evaluator::pu_approx: return pu_capacity_with_su_approx(prm, power(pt, s.evaluator)).value;
      case Evaluator::pu_mc: return mc(false, s, pt, power(pt, s.evaluator)).mean;
      case Evaluator::pu_mc_se: return mc(false, s, pt, power(pt, s.evaluator)).std_err;
      case Evaluator::loss_exact:
        return pu_capacity_loss(prm, power(pt, s.evaluator), LossMode::exact).value;
      case Evaluator::loss_approx:
        return pu_capacity_loss(prm, power(pt, s.evaluator), LossMode::approx).value;
      case Evaluator::loss_exact_rel:
        return pu_capacity_loss(prm, power(pt, s.evaluator), LossMode::exact).value /
               pu_capacity_alone(prm).value;
      case Evaluator::loss_approx_rel:
        return pu_capacity_loss(prm, power(pt, s.evaluator), LossMode::approx).value /
               pu_capacity_alone(prm).value;
      case Evaluator::p_s_loss_exact: return loss_power(prm, value_, LossMode::exact);
      case Evaluator::p_s_loss_approx: return loss_power(prm, value_, LossMode::approx);
      case Evaluator::outage: return outage_probability(prm, power(pt, s.evaluator), pt.cons.i_th());
      case Evaluator::sum_outage:
      case Evaluator::sum_loss: return sum_capacity(prm, power(pt, s.evaluator)).value;
      default: break;
    }
    throw DomainError("figure: evaluator does not apply to this sweep");
  }

  const Scenario& sc_;
  const Sweep& sweep_;
  double value_;
  const FigureOptions& opts_;
  std::map<std::tuple<bool, double, double>, MonteCarloEstimate> mc_cache_;
};

// Shortest representation that round-trips.
std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

int column_of(const FigureTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::optional<SumCapacityCurve> curve_from_table(const FigureTable& t, double gp) {
  const std::string sfx = gp_suffix(gp);
  const int cp = column_of(t, "c_p" + sfx);
  const int so = column_of(t, "sum_outage" + sfx);
  const int sl = column_of(t, "sum_loss" + sfx);
  if (cp < 0 || so < 0 || sl < 0 || t.rows.empty()) return std::nullopt;
  SumCapacityCurve c;
  c.gamma_p = gp;
  c.c_p = t.rows.front()[static_cast<std::size_t>(cp)];
  // Two quadratures per sum, each within the default absolute tolerance.
  c.tolerance = 4.0 * quad::Options{}.abs_tol;
  for (const auto& row : t.rows) {
    c.constraint.push_back(row[0]);
    c.sum_outage.push_back(row[static_cast<std::size_t>(so)]);
    c.sum_loss.push_back(row[static_cast<std::size_t>(sl)]);
  }
  return c;
}

}  // namespace

std::string_view to_string(FigureId id) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

FigureId parse_figure_id(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown figure id '" + std::string(name) + "'");
}

std::vector<FigureId> all_figures() {
  std::vector<FigureId> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

std::vector<double> Sweep::values() const {
  if (points < 1) throw DomainError("sweep: points must be >= 1");
  if (!std::isfinite(min) || !std::isfinite(max) || max < min) {
    throw DomainError("sweep: need finite min <= max");
  }
  if (scale == Scale::log && !(min > 0.0)) throw DomainError("sweep: log scale needs min > 0");
  if (points == 1) return {min};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    v[static_cast<std::size_t>(i)] =
        scale == Scale::log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                            : min + t * (max - min);
  }
  v.front() = min;
  v.back() = max;
  return v;
}

FigureSpec default_figure(FigureId id) {
  using E = Evaluator;
  FigureSpec f;
  f.id = id;
  switch (id) {
    case FigureId::bounds_x:
      f.sweep = {SweepVar::x, 0.01, 100.0, 50, Scale::log};
      f.series = {{"exact", E::exg0_exact, {}, false},
                  {"lower", E::exg0_lower, {}, false},
                  {"upper", E::exg0_upper, {}, false}};
      break;
    case FigureId::c_su:
      f.sweep = {SweepVar::gamma_p_link, 0.1, 1000.0, 41, Scale::log};
      f.series = {{"p_s", E::p_s, {}, true},           {"su_no_pu", E::su_no_pu, {}, false},
                  {"su_exact", E::su_exact, {}, false}, {"su_lower", E::su_lower, {}, false},
                  {"su_upper", E::su_upper, {}, false}, {"su_mc", E::su_mc, {}, false},
                  {"su_mc_se", E::su_mc_se, {}, false}};
      break;
    case FigureId::c_pu_su:
      f.sweep = {SweepVar::p_out, 1e-3, 0.5, 30, Scale::log};
      f.series = per_gamma({1.0, 10.0}, {{"p_s", E::p_s, true},
                                         {"pu_alone", E::pu_alone, false},
                                         {"pu_exact", E::pu_exact, false},
                                         {"pu_lower", E::pu_lower, false},
                                         {"pu_upper", E::pu_upper, false},
                                         {"pu_mc", E::pu_mc, false},
                                         {"pu_mc_se", E::pu_mc_se, false}});
      break;
    case FigureId::c_pu_apprx:
      f.sweep = {SweepVar::p_s, 0.01, 10.0, 40, Scale::log};
      f.series = per_gamma({10.0}, {{"pu_exact", E::pu_exact, false},
                                    {"pu_lower", E::pu_lower, false},
                                    {"pu_upper", E::pu_upper, false},
                                    {"pu_approx", E::pu_approx, false},
                                    {"pu_mc", E::pu_mc, false},
                                    {"pu_mc_se", E::pu_mc_se, false}});
      break;
    case FigureId::pu_closs:
      f.sweep = {SweepVar::p_s, 0.01, 10.0, 40, Scale::log};
      f.series = per_gamma({1.0, 10.0}, {{"loss_approx", E::loss_approx, false},
                                         {"loss_exact", E::loss_exact, false},
                                         {"loss_approx_rel", E::loss_approx_rel, false},
                                         {"loss_exact_rel", E::loss_exact_rel, false}});
      break;
    case FigureId::s_pow_closs:
      f.sweep = {SweepVar::loss_frac, 0.01, 0.2, 20, Scale::linear};
      f.series = per_gamma({1.0, 5.0, 10.0, 15.0}, {{"p_s_approx", E::p_s_loss_approx, true},
                                                    {"p_s_exact", E::p_s_loss_exact, true}});
      break;
    case FigureId::c_sim_loss:
      f.sweep = {SweepVar::loss_frac, 0.01, 0.2, 20, Scale::linear};
      f.series = per_gamma({1.0, 10.0}, {{"p_s", E::p_s, true},
                                         {"su_exact", E::su_exact, false},
                                         {"pu_exact", E::pu_exact, false},
                                         {"pu_approx", E::pu_approx, false}});
      break;
    case FigureId::loss_outage:
      f.sweep = {SweepVar::loss_frac, 0.01, 0.2, 20, Scale::linear};
      f.series = per_gamma({1.0, 5.0, 10.0, 15.0}, {{"outage", E::outage, false}});
      break;
    case FigureId::sum_cap:
      f.sweep = {SweepVar::constraint, 0.01, 0.2, 20, Scale::linear};
      f.series = per_gamma({1.0, 10.0}, {{"c_p", E::pu_alone, false},
                                         {"sum_outage", E::sum_outage, false},
                                         {"sum_loss", E::sum_loss, false}});
      break;
  }
  return f;
}

FigureTable compute_figure(const FigureSpec& spec, const Scenario& scenario,
                           const FigureOptions& opts) {
  const std::vector<double> xs = spec.sweep.values();
  const bool sweep_db = sweep_has_db(spec.sweep);

  FigureTable t;
  t.columns.emplace_back(sweep_name(spec.sweep.variable));
  if (sweep_db) t.columns.push_back(std::string(sweep_name(spec.sweep.variable)) + "_db");
  for (const auto& s : spec.series) {
    t.columns.push_back(s.label);
    if (s.db_column) t.columns.push_back(s.label + "_db");
  }

  t.rows.assign(xs.size(), {});
  std::exception_ptr failure;
  const auto n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      const double x = xs[static_cast<std::size_t>(i)];
      RowEvaluator eval(scenario, spec.sweep, x, opts);
      std::vector<double> row{x};
      if (sweep_db) row.push_back(to_db(x));
      for (const auto& s : spec.series) {
        const double v = eval(s);
        row.push_back(v);
        if (s.db_column) row.push_back(to_db(v));
      }
      t.rows[static_cast<std::size_t>(i)] = std::move(row);
    } catch (...) {
#pragma omp critical(cogcap_figure_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (spec.id == FigureId::sum_cap) {
    const auto high = curve_from_table(t, 10.0);
    const auto low = curve_from_table(t, 1.0);
    if (high && low) t.checks = sum_capacity_observations(*high, *low);
  }
  return t;
}

void write_csv(std::ostream& os, const FigureSpec& spec, const Scenario& scenario,
               const FigureOptions& opts, const FigureTable& table) {
  const char* mode = opts.alloc_mode == LossMode::exact    ? "exact"
                     : opts.alloc_mode == LossMode::approx ? "approx"
                                                           : "bound";
  os << "# figure: " << to_string(spec.id) << '\n'
     << "# tool_version: " << COGCAP_VERSION << '\n'
     << "# scenario_hash: " << scenario_hash(scenario) << '\n'
     << "# scenario: " << to_json(scenario).dump() << '\n'
     << "# seed: " << opts.seed << '\n'
     << "# samples: " << opts.samples << '\n'
     << "# rng: " << kRngAlgorithm << '\n'
     << "# loss_allocation_mode: " << mode << '\n'
     << "# sweep: " << sweep_name(spec.sweep.variable) << ' '
     << (spec.sweep.scale == Scale::log ? "log" : "linear") << ' '
     << format_value(spec.sweep.min) << ' ' << format_value(spec.sweep.max) << ' '
     << spec.sweep.points << '\n'
     << "# units: capacities in nats/s/Hz, powers linear, *_db = 10 log10(value), "
        "nan = infeasible target\n";
  for (const auto& c : table.checks) {
    os << "# check: " << (c.passed ? "PASS " : "FAIL ") << c.name
       << " measured=" << format_value(c.measured) << " threshold=" << format_value(c.threshold)
       << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_value(row[i]);
    os << '\n';
  }
}

FigureTable run_figure(const FigureSpec& spec, const Scenario& scenario,
                       const std::filesystem::path& out_path, const FigureOptions& opts) {
  FigureTable t = compute_figure(spec, scenario, opts);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path.string() + "' for writing");
  write_csv(out, spec, scenario, opts, t);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + out_path.string() + "' failed");
  return t;
}

}  // namespace cogcap
