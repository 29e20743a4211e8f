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

#include <functional>

#include "photonq/client/client.hpp"
#include "photonq/fock/fock_state.hpp"

namespace photonq::client {

// Real-valued function of a measurement outcome.
using Observable = std::function<double(const fock::FockState&)>;

// Photon count in one mode.
Observable mode_occupation(int mode);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Treats the histogram as i.i.d. draws:
//   value     = sum O(outcome) * count / total
//   std_error = sample standard deviation / sqrt(total)
// Throws ClientError(insufficient_data) below 2 shots.
Estimate estimate_observable(const SampleResult& result, const Observable& observable);

// Convenience: estimate for every mode at once.
std::vector<Estimate> estimate_mode_occupations(const SampleResult& result);

}  // namespace photonq::client
