#ifndef COGCAP_SCENARIO_HPP
#define COGCAP_SCENARIO_HPP

//
// Scenario files.
//
// A scenario is a flat JSON object; all values are linear (not dB):
//
//   {
//     "p_p": 10, "n_s": 1, "n_p": 1,
//     "gbar0": 1, "gbar1": 1, "hbar0": 1, "hbar1": 1,
//     "i_th_fraction": 0.1,        // or "i_th": <absolute threshold>
//     "p_out": 0.1,
//     "loss_frac": 0.05            // optional
//   }
//
// The seven system keys and p_out are required, exactly one of i_th and
// i_th_fraction must be present, and any other key is rejected.
// i_th_fraction expresses I_th = fraction * gamma_p and is re-applied whenever
// a sweep changes gamma_p.
//

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "cogcap/model.hpp"

namespace cogcap {

struct Scenario {
  SystemParams params;
  std::optional<double> i_th;           // absolute threshold
  std::optional<double> i_th_fraction;  // threshold as a fraction of gamma_p
  double p_out = 0.1;
  std::optional<double> loss_frac;

  /// Constraints for `p` (which may be a gamma_p-swept variant of params).
  Constraints constraints_for(const SystemParams& p) const;
  Constraints constraints() const { return constraints_for(params); }
};

/// p_p = 10 with unit noise and unit mean gains (gamma_p = gamma_sp = 10),
/// I_th = 0.1 gamma_p, p_out = 0.1, loss_frac = 0.05.
Scenario default_scenario();

/// Throws DomainError on missing, unknown, mistyped or out-of-range keys.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json to_json(const Scenario& s);

/// FNV-1a 64 of the canonical (sorted-key) JSON form, as 16 hex digits.
std::string scenario_hash(const Scenario& s);

}  // namespace cogcap

#endif
