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

#include <memory>
#include <string>
#include <vector>

#include "photonq/qpu/device.hpp"
#include "photonq/qpu/service.hpp"

namespace photonq::cli {

// In-process QPU fleet on ephemeral ports; demos use it so experiments run
// with zero external setup.
class SelfHostedQpus {
 public:
  SelfHostedQpus(int count, qpu::DeviceConfig base, const std::string& host = "127.0.0.1");

  std::vector<std::string> urls() const;
  qpu::QpuDevice& device(std::size_t index) { return *devices_.at(index); }

 private:
  std::vector<std::unique_ptr<qpu::QpuDevice>> devices_;
  std::vector<std::unique_ptr<qpu::QpuHttpServer>> servers_;
};

}  // namespace photonq::cli
