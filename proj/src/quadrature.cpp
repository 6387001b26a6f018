#include "cogcap/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "cogcap/error.hpp"

namespace cogcap::quad {

namespace {

// 15-point Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

bool by_error(const Segment& l, const Segment& r) { return l.error < r.error; }

Segment gauss_kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
  if (!(std::isfinite(a) && std::isfinite(b)) || !(b > a)) {
    throw DomainError("quad::integrate: need finite a < b");
  }
  std::vector<Segment> heap;
  heap.reserve(static_cast<std::size_t>(opts.max_intervals) + 1);
  heap.push_back(gauss_kronrod15(f, a, b));
  int evaluations = 15;

  for (;;) {
    double total = 0.0;
    double total_err = 0.0;
    for (const auto& s : heap) {
      total += s.value;
      total_err += s.error;
    }
    if (total_err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
      return {total, total_err, static_cast<int>(heap.size()), evaluations};
    }
    if (static_cast<int>(heap.size()) >= opts.max_intervals) {
      throw ConvergenceError("quad::integrate: tolerance not reached within interval budget");
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("quad::integrate: interval cannot be subdivided further");
    }
    heap.push_back(gauss_kronrod15(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(gauss_kronrod15(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_error);
    evaluations += 30;
  }
}

Result integrate_exp_weight(const std::function<double(double)>& f, const Options& opts) {
  const double f0 = f(0.0);
  const double f1 = f(1.0);
  if (!(f0 > 0.0) || !(f1 > 0.0) || !std::isfinite(f0)) {
    throw DomainError("quad::integrate_exp_weight: integrand must be positive and finite");
  }
  // For non-increasing f: integral >= f(1) (1 - e^{-1}).
  const double lower = f1 * (1.0 - std::exp(-1.0));
  const double upper_limit = std::max(1.0, std::log(f0 / (1e-16 * lower)));
  auto weighted = [&f](double u) { return f(u) * std::exp(-u); };
  Result r = integrate(weighted, 0.0, upper_limit, opts);
  r.abs_error += f(upper_limit) * std::exp(-upper_limit);
  r.evaluations += 3;
  return r;
}

}  // namespace cogcap::quad
