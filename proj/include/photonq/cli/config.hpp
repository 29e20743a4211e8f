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

#include <string>

#include "photonq/qpu/device.hpp"
#include "photonq/sched/scheduler.hpp"

namespace photonq::cli {

// JSON config for one device service:
// {"device_id", "host", "port", "num_modes", "max_photons", "max_shots",
//  "allowed_loop_lengths", "base_latency_ms", "per_shot_latency_ms",
//  "queue_capacity", "guard": {"max_photons", "max_modes"}}
struct QpuServeConfig {
  qpu::DeviceConfig device;
  std::string host = "127.0.0.1";
  int port = 8070;
};

// JSON config for the scheduler service:
// {"host", "port", "cpus", "gpus", "qpu_endpoints": [...],
//  "usage_half_life_s", "tick_interval_ms", "user_weights": {...},
//  "dataset_path", "output_dir"}
struct SchedServeConfig {
  sched::SchedulerConfig cluster;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string dataset_path = "data/iris.csv";
  std::string output_dir = ".";
};

// Throw std::runtime_error with parse diagnostics on malformed files.
QpuServeConfig load_qpu_config(const std::string& path);
SchedServeConfig load_sched_config(const std::string& path);

}  // namespace photonq::cli
