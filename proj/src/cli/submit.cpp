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

#include "photonq/cli/submit.hpp"

#include <httplib.h>

#include <chrono>
#include <ostream>
#include <thread>

#include "photonq/cli/demos.hpp"

namespace photonq::cli {

using nlohmann::json;

SubmitOutcome submit_batch(const SubmitRequest& request, std::ostream& err) {
  SubmitOutcome outcome;
  httplib::Client http(request.scheduler_url);
  http.set_connection_timeout(std::chrono::seconds(2));

  const json body{
      {"owner", request.owner},
      {"request", {{"cpus", request.cpus}, {"gpus", request.gpus}, {"qpus", request.qpus}}},
      {"workload", {{"name", request.workload}, {"params", request.params}}}};
  const auto res = http.Post("/v1/batch", body.dump(), "application/json");
  if (!res) {
    err << "scheduler unreachable at " << request.scheduler_url << "\n";
    outcome.exit_code = kExitStartup;
    return outcome;
  }
  if (res->status != 201) {
    std::string code = "UNKNOWN";
    try {
      const json parsed = json::parse(res->body);
      code = parsed.at("error").at("code").get<std::string>();
      err << "submission rejected: " << code << ": "
          << parsed.at("error").at("message").get<std::string>() << "\n";
    } catch (...) {
      err << "submission rejected: " << res->body << "\n";
    }
    outcome.exit_code = code == "UNSATISFIABLE" ? kExitUnsatisfiable : kExitConfig;
    return outcome;
  }
  outcome.job_id = json::parse(res->body).at("job_id").get<std::string>();
  return outcome;
}

SubmitOutcome submit_and_wait(const SubmitRequest& request, std::ostream& err,
                              double poll_interval_ms) {
  SubmitOutcome outcome = submit_batch(request, err);
  if (outcome.exit_code != kExitOk) return outcome;

  httplib::Client http(request.scheduler_url);
  http.set_connection_timeout(std::chrono::seconds(2));

  std::string last_state;
  while (true) {
    const auto res = http.Get("/v1/batch/" + outcome.job_id);
    if (!res || res->status != 200) {
      err << "lost contact with the scheduler while waiting\n";
      outcome.exit_code = kExitStartup;
      return outcome;
    }
    outcome.record = json::parse(res->body);
    const std::string state = outcome.record.at("state").get<std::string>();
    if (state != last_state) {
      err << outcome.job_id << " -> " << state << "\n";
      last_state = state;
    }
    if (state == "done") {
      outcome.exit_code = kExitOk;
      return outcome;
    }
    if (state == "failed" || state == "cancelled") {
      if (outcome.record.contains("error")) {
        err << "workload error: " << outcome.record.at("error").dump() << "\n";
      }
      outcome.exit_code = kExitWorkloadFailed;
      return outcome;
    }
    std::this_thread::sleep_for(
        std::chrono::duration<double, std::milli>(poll_interval_ms));
  }
}

}  // namespace photonq::cli
