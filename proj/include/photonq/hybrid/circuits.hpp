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

#include "photonq/fock/circuit.hpp"

namespace photonq::hybrid {

// Default algorithm input: photons spread over every other time bin,
// (1,0,1,0,...), which keeps presence-bit statistics balanced. Falls back
// to filling remaining bins when photons exceed the even slots.
fock::FockState alternating_input(int num_modes, int photons);

struct DeviceShape {
  int num_modes = 8;
  std::vector<int> loop_lengths = {1, 1};
  fock::FockState input_state;  // empty -> alternating_input(num_modes, 4)

  std::size_t angle_count() const {
    return fock::expected_angle_count(num_modes, loop_lengths);
  }
  fock::FockState resolved_input(int default_photons = 4) const;
  fock::CircuitSpec circuit(const std::vector<double>& angles,
                            std::int64_t shots) const;
};

}  // namespace photonq::hybrid
