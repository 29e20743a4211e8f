// Copyright 2026 The PhotonQ Authors
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

#include <cstdint>
#include <random>
#include <vector>

namespace photonq::hybrid {

// Simultaneous perturbation stochastic approximation: two objective
// evaluations per step regardless of dimension, which is what makes it
// affordable against sampled objectives.
struct SpsaSchedule {
  double a0 = 0.1;
  double c0 = 0.05;
  double alpha = 0.602;  // standard exponents
  double gamma = 0.101;

  double step_size(int k) const { return a0 / std::pow(static_cast<double>(k + 1), alpha); }
  double perturbation(int k) const {
    return c0 / std::pow(static_cast<double>(k + 1), gamma);
  }
};

inline std::vector<double> rademacher(std::size_t dim, std::mt19937_64& gen) {
  std::vector<double> delta(dim);
  for (auto& d : delta) d = (gen() & 1ULL) ? 1.0 : -1.0;
  return delta;
}

// theta +/- c * delta.
inline std::vector<double> perturbed(const std::vector<double>& theta,
                                     const std::vector<double>& delta, double c,
                                     double sign) {
  std::vector<double> out(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) out[i] = theta[i] + sign * c * delta[i];
  return out;
}

// In-place update theta -= a * g_hat with g_hat_i = (f_plus - f_minus) /
// (2 c delta_i). Pass a negative step to ascend.
inline void spsa_update(std::vector<double>& theta, const std::vector<double>& delta,
                        double f_plus, double f_minus, double a, double c) {
  const double scale = (f_plus - f_minus) / (2.0 * c);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    theta[i] -= a * scale / delta[i];
  }
}

}  // namespace photonq::hybrid
