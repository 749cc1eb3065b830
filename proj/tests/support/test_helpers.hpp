// Copyright 2026 The qparity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qparity/cli.hpp"
#include "qparity/state_vector.hpp"

namespace qparity::testing {

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  double max = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    max = std::max(max, std::abs(a[i] - b[i]));
  }
  return max;
}

/// Haar-ish random single-qubit state: complex Gaussian entries, unit norm.
inline StateVector random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<StateVector::Complex> amps(2);
  double norm = 0.0;
  do {
    for (auto& a : amps) a = {gauss(rng), gauss(rng)};
    norm = std::sqrt(std::norm(amps[0]) + std::norm(amps[1]));
  } while (norm < 1e-6);
  for (auto& a : amps) a /= norm;
  return StateVector(std::move(amps));
}

/// Random normalized state in span{|01>, |10>} with both amplitude
/// magnitudes at least `floor`.
inline StateVector random_odd_span_state(std::mt19937_64& rng, double floor) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    StateVector::Complex alpha{gauss(rng), gauss(rng)};
    StateVector::Complex beta{gauss(rng), gauss(rng)};
    double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (norm < 1e-6) continue;
    alpha /= norm;
    beta /= norm;
    if (std::abs(alpha) < floor || std::abs(beta) < floor) continue;
    return StateVector({0.0, alpha, beta, 0.0});
  }
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("qparity");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = qparity::cli::run(static_cast<int>(argv.size()), argv.data(),
                               out, err);
  return {code, out.str(), err.str()};
}

/// Splits CSV output into rows of fields (no quoting in our CSVs).
inline std::vector<std::vector<std::string>> parse_csv(
    const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream line_stream(line);
    while (std::getline(line_stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace qparity::testing
