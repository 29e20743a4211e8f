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

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

namespace photonq::cli {

struct SubmitRequest {
  std::string scheduler_url = "http://127.0.0.1:8080";
  std::string owner = "anonymous";
  int cpus = 0;
  int gpus = 0;
  int qpus = 0;
  std::string workload;
  nlohmann::json params = nlohmann::json::object();
};

struct SubmitOutcome {
  int exit_code = 0;     // CLI exit-code contract (0/2/3/4)
  std::string job_id;
  nlohmann::json record;  // last batch-job snapshot (when available)
};

// POST the batch job. Rejections map onto the exit-code contract:
// UNSATISFIABLE -> 4, other rejections -> 1, unreachable scheduler -> 2.
SubmitOutcome submit_batch(const SubmitRequest& request, std::ostream& err);

// submit_batch + poll to a terminal state, streaming state transitions to
// err. done -> 0, failed/cancelled -> 3.
SubmitOutcome submit_and_wait(const SubmitRequest& request, std::ostream& err,
                              double poll_interval_ms = 100.0);

}  // namespace photonq::cli
