#include "cogcap/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cogcap/detail/summation.hpp"
#include "cogcap/error.hpp"

namespace cogcap {

namespace {

struct Moments {
  detail::CompensatedSum sum;
  detail::CompensatedSum sum_sq;

  void add(double x) noexcept {
    sum.add(x);
    sum_sq.add(x * x);
  }
  void merge(const Moments& o) noexcept {
    sum.merge(o.sum);
    sum_sq.merge(o.sum_sq);
  }
};

MonteCarloEstimate finish(const Moments& m, std::uint64_t n, std::uint64_t seed) {
  const double nd = static_cast<double>(n);
  const double mean = m.sum.value() / nd;
  const double var = std::max(0.0, (m.sum_sq.value() - nd * mean * mean) / (nd - 1.0));
  return {mean, std::sqrt(var / nd), n, seed};
}

template <class F>
MonteCarloEstimate serial_estimate(const SystemParams& params, std::uint64_t n,
                                   std::uint64_t seed, F f) {
  ChannelSampler sampler(params, seed);
  Moments total;
  Moments chunk;
  for (std::uint64_t i = 0; i < n; ++i) {
    chunk.add(f(sampler.next()));
    if ((i + 1) % kChunkSamples == 0 || i + 1 == n) {
      total.merge(chunk);
      chunk = Moments{};
    }
  }
  return finish(total, n, seed);
}

template <class F>
MonteCarloEstimate parallel_estimate(const SystemParams& params, std::uint64_t n,
                                     std::uint64_t seed, F f) {
  const std::uint64_t chunks = (n + kChunkSamples - 1) / kChunkSamples;
  std::vector<Moments> partial(chunks);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunkSamples;
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + kChunkSamples);
    ChannelSampler sampler(params, seed, begin);
    Moments local;
    for (std::uint64_t i = begin; i < end; ++i) local.add(f(sampler.next()));
    partial[static_cast<std::size_t>(c)] = local;
  }

  Moments total;
  for (const auto& p : partial) total.merge(p);
  return finish(total, n, seed);
}

template <class F>
MonteCarloEstimate estimate(const SystemParams& params, std::uint64_t n, std::uint64_t seed,
                            Execution exec, F f) {
  if (n < 1000) throw DomainError("Monte Carlo estimators need n >= 1000");
  return exec == Execution::serial ? serial_estimate(params, n, seed, f)
                                   : parallel_estimate(params, n, seed, f);
}

void require_power(double p_s) {
  if (!(p_s >= 0.0) || !std::isfinite(p_s)) {
    throw DomainError("Monte Carlo: p_s must be non-negative and finite");
  }
}

}  // namespace

std::string_view to_string(Execution e) noexcept {
  return e == Execution::serial ? "serial" : "parallel";
}

MonteCarloEstimate mc_su_capacity(const SystemParams& params, double p_s, std::uint64_t n,
                                  std::uint64_t seed, Execution exec) {
  require_power(p_s);
  const double p_p = params.p_p();
  const double n_s = params.n_s();
  return estimate(params, n, seed, exec, [=](const ChannelSample& s) {
    return std::log1p(s.g1 * p_s / (p_p * s.h1 + n_s));
  });
}

MonteCarloEstimate mc_pu_capacity(const SystemParams& params, double p_s, std::uint64_t n,
                                  std::uint64_t seed, Execution exec) {
  require_power(p_s);
  const double p_p = params.p_p();
  const double n_p = params.n_p();
  return estimate(params, n, seed, exec, [=](const ChannelSample& s) {
    return std::log1p(s.h0 * p_p / (p_s * s.g0 + n_p));
  });
}

MonteCarloEstimate mc_outage(const SystemParams& params, double p_s, double i_th,
                             std::uint64_t n, std::uint64_t seed, Execution exec) {
  require_power(p_s);
  if (!(i_th > 0.0)) throw DomainError("mc_outage: i_th must be positive");
  return estimate(params, n, seed, exec, [=](const ChannelSample& s) {
    return s.g0 * p_s > i_th ? 1.0 : 0.0;
  });
}

}  // namespace cogcap
