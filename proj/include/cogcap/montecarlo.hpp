#ifndef COGCAP_MONTECARLO_HPP
#define COGCAP_MONTECARLO_HPP

//
// Sample-average estimators over independent Rayleigh draws.  These are the
// independent oracle for every analytic evaluator in capacity.hpp.
//
// Samples are grouped into fixed chunks of kChunkSamples (see model.hpp).  The
// parallel kernel hands whole chunks to OpenMP threads; each chunk keeps its
// own compensated partial sums, and the partials are merged in chunk order.
// The serial reference streams a single ChannelSampler through the same
// samples and merges at the same chunk boundaries, so both executions return
// bit-identical estimates for any thread count.
//

#include <cstdint>
#include <string_view>

#include "cogcap/model.hpp"

namespace cogcap {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_err = 0.0;  // sample standard deviation / sqrt(n)
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

enum class Execution { serial, parallel };

std::string_view to_string(Execution e) noexcept;

/// Mean of ln(1 + g1 P_s / (P_P h1 + N_S)); n >= 1000.
MonteCarloEstimate mc_su_capacity(const SystemParams& params, double p_s, std::uint64_t n,
                                  std::uint64_t seed, Execution exec = Execution::parallel);

/// Mean of ln(1 + h0 P_P / (P_s g0 + N_P)); n >= 1000.
MonteCarloEstimate mc_pu_capacity(const SystemParams& params, double p_s, std::uint64_t n,
                                  std::uint64_t seed, Execution exec = Execution::parallel);

/// Frequency of g0 P_s > i_th; n >= 1000.
MonteCarloEstimate mc_outage(const SystemParams& params, double p_s, double i_th,
                             std::uint64_t n, std::uint64_t seed,
                             Execution exec = Execution::parallel);

}  // namespace cogcap

#endif
