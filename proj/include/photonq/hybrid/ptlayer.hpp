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
#include <vector>

#include "photonq/client/client.hpp"
#include "photonq/fock/distribution.hpp"
#include "photonq/hybrid/circuits.hpp"

namespace photonq::hybrid {

// Trainable quantum layer: the forward pass maps a real input vector to the
// per-mode expected photon numbers of the parameterized circuit. Inputs are
// encoded additively, effective_angle_i = angle_i + input_i (radians), which
// keeps the layer differentiable in both angles and inputs.
struct PtLayer {
  DeviceShape device;
  std::vector<double> angles;

  // Exact expectation through the circuit physics. Throws
  // fock::CapacityError outside the enumeration guard and
  // std::invalid_argument when input is longer than the angle vector.
  std::vector<double> forward_exact(const std::vector<double>& input,
                                    const fock::EnumerationGuard& guard = {}) const;

  // Sampled estimate: shots split across the pool.
  std::vector<double> forward_sampled(const std::vector<double>& input,
                                      client::SamplerPool& pool, std::int64_t shots,
                                      std::uint64_t seed) const;

  // Central finite differences of the exact forward (step h on each angle),
  // chain-ruled with the upstream gradient (one entry per mode). Returns
  // d(upstream . output)/d(angles).
  std::vector<double> grad_angles(const std::vector<double>& input,
                                  const std::vector<double>& upstream, double h = 1e-3,
                                  const fock::EnumerationGuard& guard = {}) const;
};

}  // namespace photonq::hybrid
