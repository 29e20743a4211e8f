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

#include "photonq/hybrid/ptlayer.hpp"

#include <stdexcept>

#include "photonq/client/observable.hpp"

namespace photonq::hybrid {

namespace {

std::vector<double> effective_angles(const std::vector<double>& angles,
                                     const std::vector<double>& input) {
  if (input.size() > angles.size()) {
    throw std::invalid_argument("input vector longer than the angle vector (" +
                                std::to_string(input.size()) + " > " +
                                std::to_string(angles.size()) + ")");
  }
  std::vector<double> effective = angles;
  for (std::size_t i = 0; i < input.size(); ++i) effective[i] += input[i];
  return effective;
}

}  // namespace

std::vector<double> PtLayer::forward_exact(const std::vector<double>& input,
                                           const fock::EnumerationGuard& guard) const {
  if (angles.size() != device.angle_count()) {
    throw std::invalid_argument("angle vector does not match the device shape");
  }
  const auto spec = device.circuit(effective_angles(angles, input), 1);
  return fock::mean_photon_numbers(fock::exact_distribution(spec, guard));
}

std::vector<double> PtLayer::forward_sampled(const std::vector<double>& input,
                                             client::SamplerPool& pool,
                                             std::int64_t shots,
                                             std::uint64_t seed) const {
  if (angles.size() != device.angle_count()) {
    throw std::invalid_argument("angle vector does not match the device shape");
  }
  const auto spec = device.circuit(effective_angles(angles, input), shots);
  const auto result = pool.sample_split(spec, seed);
  const auto estimates = client::estimate_mode_occupations(result);
  std::vector<double> output;
  output.reserve(estimates.size());
  for (const auto& estimate : estimates) output.push_back(estimate.value);
  return output;
}

std::vector<double> PtLayer::grad_angles(const std::vector<double>& input,
                                         const std::vector<double>& upstream, double h,
                                         const fock::EnumerationGuard& guard) const {
  if (upstream.size() != static_cast<std::size_t>(device.num_modes)) {
    throw std::invalid_argument("upstream gradient needs one entry per mode");
  }
  PtLayer probe = *this;
  std::vector<double> grad(angles.size(), 0.0);
  for (std::size_t k = 0; k < angles.size(); ++k) {
    probe.angles = angles;
    probe.angles[k] = angles[k] + h;
    const auto plus = probe.forward_exact(input, guard);
    probe.angles[k] = angles[k] - h;
    const auto minus = probe.forward_exact(input, guard);
    double dot = 0.0;
    for (std::size_t i = 0; i < upstream.size(); ++i) {
      dot += upstream[i] * (plus[i] - minus[i]) / (2.0 * h);
    }
    grad[k] = dot;
  }
  return grad;
}

}  // namespace photonq::hybrid
