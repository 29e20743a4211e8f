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

#include "photonq/cli/selfhost.hpp"

#include <stdexcept>

namespace photonq::cli {

SelfHostedQpus::SelfHostedQpus(int count, qpu::DeviceConfig base,
                               const std::string& host) {
  for (int i = 0; i < count; ++i) {
    qpu::DeviceConfig config = base;
    config.device_id = base.device_id + std::to_string(i);
    devices_.push_back(std::make_unique<qpu::QpuDevice>(config));
    servers_.push_back(std::make_unique<qpu::QpuHttpServer>(*devices_.back(), host));
    if (servers_.back()->start(0) <= 0) {
      throw std::runtime_error("failed to bind a self-hosted device service");
    }
  }
}

std::vector<std::string> SelfHostedQpus::urls() const {
  std::vector<std::string> out;
  out.reserve(servers_.size());
  for (const auto& server : servers_) out.push_back(server->base_url());
  return out;
}

}  // namespace photonq::cli
