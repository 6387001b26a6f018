#ifndef COGCAP_TESTS_GRID_HPP
#define COGCAP_TESTS_GRID_HPP

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cogcap/model.hpp"

namespace testgrid {

struct Point {
  cogcap::SystemParams params;
  double gamma_p;
  double gamma_sp;
  double p_s;
};

inline std::vector<Point> standard_grid() {
  const std::string path = std::string(COGCAP_FIXTURE_DIR) + "/standard_grid_v1.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  const auto doc = nlohmann::json::parse(in);
  std::vector<Point> out;
  for (double gp : doc.at("gamma_p")) {
    for (double gsp : doc.at("gamma_sp")) {
      const auto params = cogcap::SystemParams::from_ratios(
          gp, gsp, doc.at("n_s"), doc.at("n_p"), doc.at("gbar0"), doc.at("gbar1"),
          doc.at("hbar0"));
      for (double ps : doc.at("p_s")) out.push_back({params, gp, gsp, ps});
    }
  }
  return out;
}

inline std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    v.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
  }
  return v;
}

}  // namespace testgrid

#endif
