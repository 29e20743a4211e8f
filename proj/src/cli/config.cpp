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

#include "photonq/cli/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace photonq::cli {

using nlohmann::json;

namespace {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("config parse error in " + path + ": " + e.what());
  }
}

}  // namespace

QpuServeConfig load_qpu_config(const std::string& path) {
  QpuServeConfig config;
  if (path.empty()) return config;
  const json body = load_file(path);
  config.host = body.value("host", config.host);
  config.port = body.value("port", config.port);
  auto& device = config.device;
  device.device_id = body.value("device_id", device.device_id);
  device.num_modes = body.value("num_modes", device.num_modes);
  device.max_photons = body.value("max_photons", device.max_photons);
  device.max_shots = body.value("max_shots", device.max_shots);
  device.allowed_loop_lengths =
      body.value("allowed_loop_lengths", device.allowed_loop_lengths);
  device.base_latency_ms = body.value("base_latency_ms", device.base_latency_ms);
  device.per_shot_latency_ms =
      body.value("per_shot_latency_ms", device.per_shot_latency_ms);
  device.queue_capacity = body.value("queue_capacity", device.queue_capacity);
  if (body.contains("guard")) {
    device.guard.max_photons =
        body.at("guard").value("max_photons", device.guard.max_photons);
    device.guard.max_modes = body.at("guard").value("max_modes", device.guard.max_modes);
  }
  return config;
}

SchedServeConfig load_sched_config(const std::string& path) {
  SchedServeConfig config;
  if (path.empty()) return config;
  const json body = load_file(path);
  config.host = body.value("host", config.host);
  config.port = body.value("port", config.port);
  config.dataset_path = body.value("dataset_path", config.dataset_path);
  config.output_dir = body.value("output_dir", config.output_dir);
  auto& cluster = config.cluster;
  cluster.cpus = body.value("cpus", cluster.cpus);
  cluster.gpus = body.value("gpus", cluster.gpus);
  cluster.qpu_endpoints = body.value("qpu_endpoints", cluster.qpu_endpoints);
  cluster.usage_half_life_s = body.value("usage_half_life_s", cluster.usage_half_life_s);
  cluster.tick_interval_ms = body.value("tick_interval_ms", cluster.tick_interval_ms);
  if (body.contains("user_weights")) {
    for (const auto& [user, weight] : body.at("user_weights").items()) {
      cluster.user_weights[user] = weight.get<double>();
    }
  }
  return config;
}

}  // namespace photonq::cli
