#include "cogcap/model.hpp"

#include <cmath>
#include <string>

#include "cogcap/error.hpp"

namespace cogcap {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string("SystemParams: ") + name + " must be positive and finite");
  }
}

}  // namespace

SystemParams::SystemParams(const Fields& f) : f_(f) {
  require_positive(f.p_p, "p_p");
  require_positive(f.n_s, "n_s");
  require_positive(f.n_p, "n_p");
  require_positive(f.gbar0, "gbar0");
  require_positive(f.gbar1, "gbar1");
  require_positive(f.hbar0, "hbar0");
  require_positive(f.hbar1, "hbar1");
}

SystemParams SystemParams::from_ratios(double gamma_p, double gamma_sp, double n_s, double n_p,
                                       double gbar0, double gbar1, double hbar0) {
  require_positive(gamma_p, "gamma_p");
  require_positive(gamma_sp, "gamma_sp");
  require_positive(hbar0, "hbar0");
  const double p_p = gamma_p * n_p / hbar0;
  return SystemParams(Fields{.p_p = p_p,
                             .n_s = n_s,
                             .n_p = n_p,
                             .gbar0 = gbar0,
                             .gbar1 = gbar1,
                             .hbar0 = hbar0,
                             .hbar1 = gamma_sp * n_s / p_p});
}

SystemParams SystemParams::with_gamma_p(double gamma_p) const {
  require_positive(gamma_p, "gamma_p");
  Fields f = f_;
  f.p_p = gamma_p * f.n_p / f.hbar0;
  return SystemParams(f);
}

SystemParams SystemParams::with_gamma_p_link(double gamma_p) const {
  require_positive(gamma_p, "gamma_p");
  Fields f = f_;
  f.hbar0 = gamma_p * f.n_p / f.p_p;
  return SystemParams(f);
}

Constraints::Constraints(double i_th, double p_out, std::optional<double> loss_frac)
    : i_th_(i_th), p_out_(p_out), loss_frac_(loss_frac) {
  if (!(i_th > 0.0) || !std::isfinite(i_th)) {
    throw DomainError("Constraints: i_th must be positive and finite");
  }
  if (!(p_out > 0.0 && p_out < 1.0)) throw DomainError("Constraints: p_out must lie in (0, 1)");
  if (loss_frac && !(*loss_frac > 0.0 && *loss_frac < 1.0)) {
    throw DomainError("Constraints: loss_frac must lie in (0, 1)");
  }
}

double ith_from_gamma_p(const SystemParams& params, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw DomainError("ith_from_gamma_p: fraction must lie in (0, 1]");
  }
  return fraction * params.gamma_p();
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ChannelSampler::ChannelSampler(const SystemParams& params, std::uint64_t seed,
                               std::uint64_t first_sample)
    : params_(params), seed_(seed), position_(first_sample) {
  enter_chunk(first_sample / kChunkSamples);
  engine_.discard(4 * (first_sample % kChunkSamples));
}

void ChannelSampler::enter_chunk(std::uint64_t chunk) {
  engine_.seed(split_seed(seed_, chunk));
}

ChannelSample ChannelSampler::next() {
  if (position_ % kChunkSamples == 0 && position_ != 0) enter_chunk(position_ / kChunkSamples);
  ++position_;
  ChannelSample s{};
  s.g0 = exponential(params_.gbar0());
  s.g1 = exponential(params_.gbar1());
  s.h0 = exponential(params_.hbar0());
  s.h1 = exponential(params_.hbar1());
  return s;
}

std::vector<ChannelSample> sample_channels(const SystemParams& params, std::uint64_t seed,
                                           std::size_t n) {
  if (n < 1) throw DomainError("sample_channels: n must be >= 1");
  std::vector<ChannelSample> out;
  out.reserve(n);
  ChannelSampler sampler(params, seed);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace cogcap
