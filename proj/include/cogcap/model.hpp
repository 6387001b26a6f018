#ifndef COGCAP_MODEL_HPP
#define COGCAP_MODEL_HPP

//
// Scenario definition for one primary (PT -> PR) and one secondary (ST -> SR)
// link pair under independent Rayleigh block fading, plus the channel sampler
// used by the Monte Carlo estimators.
//
// Channel power gains (all exponentially distributed):
//   g0: ST -> PR   g1: ST -> SR   h0: PT -> PR   h1: PT -> SR
//
// All quantities are linear (not dB).
//

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace cogcap {

class SystemParams {
public:
  struct Fields {
    double p_p = 10.0;   // PU transmit power
    double n_s = 1.0;    // noise power at SR
    double n_p = 1.0;    // noise power at PR
    double gbar0 = 1.0;  // mean gain ST -> PR
    double gbar1 = 1.0;  // mean gain ST -> SR
    double hbar0 = 1.0;  // mean gain PT -> PR
    double hbar1 = 1.0;  // mean gain PT -> SR
  };

  SystemParams() : SystemParams(Fields{}) {}
  /// Throws DomainError unless every field is strictly positive and finite.
  explicit SystemParams(const Fields& f);

  /// Back-solve P_P and hbar1 from the PU SNR and the PU-to-SU interference ratio.
  static SystemParams from_ratios(double gamma_p, double gamma_sp, double n_s = 1.0,
                                  double n_p = 1.0, double gbar0 = 1.0, double gbar1 = 1.0,
                                  double hbar0 = 1.0);

  double p_p() const noexcept { return f_.p_p; }
  double n_s() const noexcept { return f_.n_s; }
  double n_p() const noexcept { return f_.n_p; }
  double gbar0() const noexcept { return f_.gbar0; }
  double gbar1() const noexcept { return f_.gbar1; }
  double hbar0() const noexcept { return f_.hbar0; }
  double hbar1() const noexcept { return f_.hbar1; }
  const Fields& fields() const noexcept { return f_; }

  /// gamma_p = P_P hbar0 / N_P
  double gamma_p() const noexcept { return f_.p_p * f_.hbar0 / f_.n_p; }
  /// gamma_sp = P_P hbar1 / N_S
  double gamma_sp() const noexcept { return f_.p_p * f_.hbar1 / f_.n_s; }

  /// Same scenario with the PU SNR moved to `gamma_p` by changing the PU
  /// transmit power; gamma_sp scales along with it.
  SystemParams with_gamma_p(double gamma_p) const;
  /// Same scenario with the PU SNR moved to `gamma_p` through hbar0 only;
  /// P_P and hence gamma_sp stay fixed.
  SystemParams with_gamma_p_link(double gamma_p) const;
  SystemParams with(const Fields& f) const { return SystemParams(f); }

  friend bool operator==(const SystemParams& a, const SystemParams& b) noexcept {
    const auto& x = a.f_;
    const auto& y = b.f_;
    return x.p_p == y.p_p && x.n_s == y.n_s && x.n_p == y.n_p && x.gbar0 == y.gbar0 &&
           x.gbar1 == y.gbar1 && x.hbar0 == y.hbar0 && x.hbar1 == y.hbar1;
  }

private:
  Fields f_;
};

struct DerivedRatios {
  double gamma_p;
  double gamma_sp;
};

inline DerivedRatios ratios(const SystemParams& p) { return {p.gamma_p(), p.gamma_sp()}; }

/// PU-imposed constraints on the secondary transmission.
class Constraints {
public:
  /// i_th > 0, 0 < p_out < 1, 0 < loss_frac < 1 when present.
  Constraints(double i_th, double p_out, std::optional<double> loss_frac = std::nullopt);

  double i_th() const noexcept { return i_th_; }
  double p_out() const noexcept { return p_out_; }
  const std::optional<double>& loss_frac() const noexcept { return loss_frac_; }

private:
  double i_th_;
  double p_out_;
  std::optional<double> loss_frac_;
};

/// I_th = fraction * gamma_p, fraction in (0, 1].
double ith_from_gamma_p(const SystemParams& params, double fraction);

struct ChannelSample {
  double g0, g1, h0, h1;
};

// ---------------------------------------------------------------------------
// Random number generation
//
// Sample i of stream `seed` belongs to chunk i / kChunkSamples.  Every chunk
// owns an independent std::mt19937_64 seeded with split_seed(seed, chunk), so
// a stream can be partitioned across workers without changing its values.
// Each ChannelSample consumes four 64-bit draws in the order g0, g1, h0, h1.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kChunkSamples = std::size_t{1} << 16;
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-chunk65536";

/// SplitMix64 finalizer applied to seed + (stream + 1) * golden-gamma.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// 64 random bits -> uniform on (0, 1].
inline double unit_interval_open_closed(std::uint64_t bits) noexcept {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

class ChannelSampler {
public:
  ChannelSampler(const SystemParams& params, std::uint64_t seed, std::uint64_t first_sample = 0);

  ChannelSample next();
  std::uint64_t position() const noexcept { return position_; }

private:
  void enter_chunk(std::uint64_t chunk);
  double exponential(double mean) { return -mean * std::log(unit_interval_open_closed(engine_())); }

  SystemParams params_;
  std::uint64_t seed_;
  std::uint64_t position_;
  std::mt19937_64 engine_;
};

/// The first n samples of stream `seed` (n >= 1).
std::vector<ChannelSample> sample_channels(const SystemParams& params, std::uint64_t seed,
                                           std::size_t n);

}  // namespace cogcap

#endif
