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

#include "photonq/util/wire.hpp"

#include <nlohmann/json.hpp>

namespace photonq::wire {

using nlohmann::json;

json spec_to_json(const fock::CircuitSpec& spec, std::optional<std::uint64_t> seed) {
  json body{{"input_state", spec.input_state},
            {"loop_lengths", spec.loop_lengths},
            {"bs_angles", spec.bs_angles},
            {"n_samples", spec.n_samples}};
  if (seed) body["seed"] = *seed;
  return body;
}

fock::CircuitSpec spec_from_json(const json& body) {
  if (!body.is_object()) throw std::invalid_argument("job body must be a JSON object");
  for (const char* field : {"input_state", "loop_lengths", "bs_angles", "n_samples"}) {
    if (!body.contains(field)) {
      throw std::invalid_argument(std::string("missing field: ") + field);
    }
  }
  fock::CircuitSpec spec;
  try {
    spec.input_state = body.at("input_state").get<fock::FockState>();
    spec.loop_lengths = body.at("loop_lengths").get<std::vector<int>>();
    spec.bs_angles = body.at("bs_angles").get<std::vector<double>>();
    spec.n_samples = body.at("n_samples").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed job body: ") + e.what());
  }
  spec.num_modes = static_cast<int>(spec.input_state.size());
  return spec;
}

std::optional<std::uint64_t> seed_from_json(const json& body) {
  if (!body.is_object() || !body.contains("seed") || body.at("seed").is_null()) {
    return std::nullopt;
  }
  try {
    return body.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed seed: ") + e.what());
  }
}

json histogram_to_json(const fock::Histogram& histogram) {
  json body = json::object();
  for (const auto& [outcome, count] : histogram) {
    body[fock::format_state(outcome)] = count;
  }
  return body;
}

fock::Histogram histogram_from_json(const json& body) {
  if (!body.is_object()) throw std::invalid_argument("histogram must be a JSON object");
  fock::Histogram histogram;
  for (const auto& [key, value] : body.items()) {
    histogram[fock::parse_state(key)] = value.get<std::int64_t>();
  }
  return histogram;
}

json error_body(const std::string& code, const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace photonq::wire
