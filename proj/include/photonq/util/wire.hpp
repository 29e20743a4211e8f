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

// JSON encodings shared by the device service and the client. Field names
// follow the device job schema: input_state, loop_lengths, bs_angles,
// n_samples, seed. Histogram keys are comma-separated occupation tuples
// such as "(2,0,1,0,1,0,0,0)".

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "photonq/fock/circuit.hpp"
#include "photonq/fock/fock_state.hpp"

namespace photonq::wire {

nlohmann::json spec_to_json(const fock::CircuitSpec& spec,
                            std::optional<std::uint64_t> seed = std::nullopt);

// Reads input_state/loop_lengths/bs_angles/n_samples; num_modes is the
// input_state length. Throws std::invalid_argument on malformed bodies.
fock::CircuitSpec spec_from_json(const nlohmann::json& body);

std::optional<std::uint64_t> seed_from_json(const nlohmann::json& body);

nlohmann::json histogram_to_json(const fock::Histogram& histogram);
fock::Histogram histogram_from_json(const nlohmann::json& body);

// {"error": {"code": ..., "message": ...}}
nlohmann::json error_body(const std::string& code, const std::string& message);

}  // namespace photonq::wire
