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

#include "photonq/sched/scheduler.hpp"

namespace httplib {
class Server;
}

namespace photonq::sched {

// REST control plane for one Cluster.
//
//   POST   /v1/batch           {"owner", "request": {cpus,gpus,qpus},
//                               "workload": {"name", "params"}}
//   GET    /v1/batch/{id}      batch job snapshot
//   DELETE /v1/batch/{id}      cancel a pending job
//   GET    /v1/cluster/status  pool, queues, per-user usage
class SchedHttpServer {
 public:
  explicit SchedHttpServer(Cluster& cluster, std::string host = "127.0.0.1");
  ~SchedHttpServer();

  SchedHttpServer(const SchedHttpServer&) = delete;
  SchedHttpServer& operator=(const SchedHttpServer&) = delete;

  int start(int port);  // 0 picks a free port; returns bound port or -1
  void stop();

  int port() const { return port_; }
  std::string base_url() const;

 private:
  Cluster& cluster_;
  std::string host_;
  int port_ = -1;
  std::unique_ptr<httplib::Server> server_;
  std::thread serve_thread_;
};

nlohmann::json batch_job_to_json(const BatchJob& job);
nlohmann::json cluster_status_to_json(const ClusterStatus& status);

}  // namespace photonq::sched
