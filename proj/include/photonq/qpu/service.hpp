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
#include <thread>

#include "photonq/qpu/device.hpp"

namespace httplib {
class Server;
}

namespace photonq::qpu {

// REST front end for one QpuDevice.
//
//   POST   /v1/jobs            submit {input_state, loop_lengths, bs_angles,
//                              n_samples, seed?}; owner from the X-User header
//   GET    /v1/jobs/{id}       job record snapshot
//   GET    /v1/jobs/{id}/results  histogram once terminal (409 before that)
//   DELETE /v1/jobs/{id}       cancel a queued job
//   GET    /v1/admin/status    device status snapshot
//
// Errors are {"error": {"code", "message"}} with 400 for validation, 404 for
// unknown ids, 409 for state conflicts, and 429 when the queue is full.
class QpuHttpServer {
 public:
  explicit QpuHttpServer(QpuDevice& device, std::string host = "127.0.0.1");
  ~QpuHttpServer();

  QpuHttpServer(const QpuHttpServer&) = delete;
  QpuHttpServer& operator=(const QpuHttpServer&) = delete;

  // Binds and serves on a background thread. port 0 picks a free port.
  // Returns the bound port, or -1 on bind failure.
  int start(int port);
  void stop();

  int port() const { return port_; }
  std::string base_url() const;

 private:
  QpuDevice& device_;
  std::string host_;
  int port_ = -1;
  std::unique_ptr<httplib::Server> server_;
  std::thread serve_thread_;
};

}  // namespace photonq::qpu
