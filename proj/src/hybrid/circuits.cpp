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

#include "photonq/hybrid/circuits.hpp"

#include <stdexcept>

namespace photonq::hybrid {

fock::FockState alternating_input(int num_modes, int photons) {
  if (num_modes < 1 || photons < 0 || photons > num_modes) {
    throw std::invalid_argument("need 0 <= photons <= num_modes");
  }
  fock::FockState state(static_cast<std::size_t>(num_modes), 0);
  int placed = 0;
  for (int i = 0; i < num_modes && placed < photons; i += 2) {
    state[static_cast<std::size_t>(i)] = 1;
    ++placed;
  }
  for (int i = 1; i < num_modes && placed < photons; i += 2) {
    state[static_cast<std::size_t>(i)] = 1;
    ++placed;
  }
  return state;
}

fock::FockState DeviceShape::resolved_input(int default_photons) const {
  if (!input_state.empty()) return input_state;
  return alternating_input(num_modes, std::min(default_photons, num_modes));
}

fock::CircuitSpec DeviceShape::circuit(const std::vector<double>& angles,
                                       std::int64_t shots) const {
  fock::CircuitSpec spec;
  spec.num_modes = num_modes;
  spec.loop_lengths = loop_lengths;
  spec.bs_angles = angles;
  spec.input_state = resolved_input();
  spec.n_samples = shots;
  return spec;
}

}  // namespace photonq::hybrid
