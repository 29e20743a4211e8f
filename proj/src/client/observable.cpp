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

#include "photonq/client/observable.hpp"

#include <cmath>

namespace photonq::client {

Observable mode_occupation(int mode) {
  return [mode](const fock::FockState& outcome) {
    return static_cast<double>(outcome.at(static_cast<std::size_t>(mode)));
  };
}

Estimate estimate_observable(const SampleResult& result, const Observable& observable) {
  const double total = static_cast<double>(result.total_shots);
  if (result.total_shots < 2) {
    throw ClientError(ErrorKind::insufficient_data,
                      "estimator needs at least 2 shots, got " +
                          std::to_string(result.total_shots));
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& [outcome, count] : result.histogram) {
    const double value = observable(outcome);
    sum += value * static_cast<double>(count);
    sum_sq += value * value * static_cast<double>(count);
  }
  const double mean = sum / total;
  // Unbiased sample variance; clamp tiny negative rounding residue.
  const double variance = std::max(0.0, (sum_sq - total * mean * mean) / (total - 1.0));
  return {mean, std::sqrt(variance / total)};
}

std::vector<Estimate> estimate_mode_occupations(const SampleResult& result) {
  std::vector<Estimate> estimates;
  if (result.histogram.empty()) return estimates;
  const std::size_t modes = result.histogram.begin()->first.size();
  estimates.reserve(modes);
  for (std::size_t mode = 0; mode < modes; ++mode) {
    estimates.push_back(
        estimate_observable(result, mode_occupation(static_cast<int>(mode))));
  }
  return estimates;
}

}  // namespace photonq::client
