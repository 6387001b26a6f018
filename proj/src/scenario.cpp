#include "cogcap/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cogcap/error.hpp"

namespace cogcap {

namespace {

const std::set<std::string> kAllowedKeys = {"p_p",   "n_s",   "n_p",  "gbar0",
                                            "gbar1", "hbar0", "hbar1", "i_th",
                                            "i_th_fraction",    "p_out", "loss_frac"};

double number(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw DomainError(std::string("scenario: missing key '") + key + "'");
  if (!it->is_number()) throw DomainError(std::string("scenario: '") + key + "' must be a number");
  return it->get<double>();
}

std::optional<double> optional_number(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  return number(doc, key);
}

}  // namespace

Constraints Scenario::constraints_for(const SystemParams& p) const {
  const double threshold = i_th_fraction ? ith_from_gamma_p(p, *i_th_fraction) : i_th.value();
  return Constraints(threshold, p_out, loss_frac);
}

Scenario default_scenario() {
  Scenario s{.params = SystemParams(),
             .i_th = std::nullopt,
             .i_th_fraction = 0.1,
             .p_out = 0.1,
             .loss_frac = 0.05};
  return s;
}

Scenario parse_scenario(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DomainError("scenario: top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kAllowedKeys.contains(key)) throw DomainError("scenario: unknown key '" + key + "'");
  }
  SystemParams params(SystemParams::Fields{.p_p = number(doc, "p_p"),
                                           .n_s = number(doc, "n_s"),
                                           .n_p = number(doc, "n_p"),
                                           .gbar0 = number(doc, "gbar0"),
                                           .gbar1 = number(doc, "gbar1"),
                                           .hbar0 = number(doc, "hbar0"),
                                           .hbar1 = number(doc, "hbar1")});
  Scenario s{.params = params,
             .i_th = optional_number(doc, "i_th"),
             .i_th_fraction = optional_number(doc, "i_th_fraction"),
             .p_out = number(doc, "p_out"),
             .loss_frac = optional_number(doc, "loss_frac")};
  if (s.i_th.has_value() == s.i_th_fraction.has_value()) {
    throw DomainError("scenario: exactly one of 'i_th' and 'i_th_fraction' is required");
  }
  s.constraints();  // range checks
  return s;
}

Scenario parse_scenario(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("scenario: malformed JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("scenario: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

nlohmann::json to_json(const Scenario& s) {
  const auto& f = s.params.fields();
  nlohmann::json doc = {{"p_p", f.p_p},     {"n_s", f.n_s},     {"n_p", f.n_p},
                        {"gbar0", f.gbar0}, {"gbar1", f.gbar1}, {"hbar0", f.hbar0},
                        {"hbar1", f.hbar1}, {"p_out", s.p_out}};
  if (s.i_th) doc["i_th"] = *s.i_th;
  if (s.i_th_fraction) doc["i_th_fraction"] = *s.i_th_fraction;
  if (s.loss_frac) doc["loss_frac"] = *s.loss_frac;
  return doc;
}

std::string scenario_hash(const Scenario& s) {
  const std::string canonical = to_json(s).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace cogcap
