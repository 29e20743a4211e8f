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

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace photonq::sched {

struct ResourceRequest {
  int cpus = 0;
  int gpus = 0;
  int qpus = 0;
};

struct Allocation {
  int cpus = 0;
  int gpus = 0;
  std::vector<std::string> qpu_endpoints;
};

enum class BatchState { pending, running, done, failed, cancelled };

const char* batch_state_name(BatchState state);

struct WorkloadSpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct WorkloadResult {
  bool ok = false;
  nlohmann::json detail = nlohmann::json::object();  // result payload, or error text
};

struct WorkloadContext {
  std::string job_id;
  std::string owner;
  Allocation allocation;
  nlohmann::json params;
};

using WorkloadFn = std::function<WorkloadResult(const WorkloadContext&)>;

// Named workloads a batch job can run. The scheduler stays decoupled from
// any particular algorithm; callers register what their deployment offers.
class WorkloadRegistry {
 public:
  void add(const std::string& name, WorkloadFn fn) { workloads_[name] = std::move(fn); }
  const WorkloadFn* find(const std::string& name) const {
    const auto it = workloads_.find(name);
    return it == workloads_.end() ? nullptr : &it->second;
  }
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [name, fn] : workloads_) out.push_back(name);
    return out;
  }

 private:
  std::map<std::string, WorkloadFn> workloads_;
};

struct BatchJob {
  std::string job_id;
  std::string owner;
  ResourceRequest request;
  WorkloadSpec workload;
  BatchState state = BatchState::pending;
  double priority = 0.0;  // fixed at admission
  std::int64_t submit_seq = 0;
  double submitted_at_s = 0.0;
  double started_at_s = 0.0;
  double finished_at_s = 0.0;
  std::optional<Allocation> granted;  // present iff running or terminal-from-running
  nlohmann::json result = nlohmann::json::object();
  std::string error;
};

struct UserAccount {
  std::string user;
  double decayed_usage = 0.0;  // resource-seconds, exponential half-life decay
  double share_weight = 1.0;
  double last_update_s = 0.0;
};

struct SchedulerConfig {
  int cpus = 8;
  int gpus = 2;
  std::vector<std::string> qpu_endpoints;
  double usage_half_life_s = 300.0;
  double tick_interval_ms = 100.0;  // 0 disables the periodic tick
  std::map<std::string, double> user_weights;
};

struct EndpointState {
  std::string url;
  bool healthy = true;
  std::string holder;  // job id holding the license, empty when free
};

struct ClusterStatus {
  int cpus_total = 0;
  int cpus_free = 0;
  int gpus_total = 0;
  int gpus_free = 0;
  std::vector<EndpointState> qpus;
  std::vector<std::string> pending;  // in scheduling order
  std::vector<std::string> running;
  std::map<std::string, UserAccount> users;
  std::int64_t jobs_completed = 0;
};

// Linearized log of scheduling events with post-event pool state; tests
// replay it to prove no oversubscription and license conservation.
struct SchedEvent {
  enum class Kind { submitted, started, finished, cancelled };
  Kind kind;
  std::string job_id;
  std::int64_t seq = 0;
  int free_cpus = 0;
  int free_gpus = 0;
  std::vector<std::string> qpu_holders;  // by endpoint index, "" when free
};

// Multi-user workload manager over a heterogeneous pool: CPU and GPU slots
// are counted, QPU endpoints are exclusive leases (license count 1 each).
//
// Policy: pending jobs are scanned in descending admission priority
// (fair-share weight / (1 + decayed usage), ties broken by submission
// order); every job whose full request fits the free pool is started.
// No preemption, no partial grants. Started workloads run on their own
// thread and report back through complete().
class Cluster {
 public:
  using ClockFn = std::function<double()>;

  Cluster(SchedulerConfig config, WorkloadRegistry registry, ClockFn clock = {});
  ~Cluster();

  Cluster(const Cluster&) = delete;
  Cluster& operator=(const Cluster&) = delete;

  struct Rejected {
    std::string code;  // UNSATISFIABLE | BAD_WORKLOAD | EMPTY_REQUEST | BAD_REQUEST
    std::string message;
  };

  std::variant<std::string, Rejected> submit(const std::string& owner,
                                             const ResourceRequest& request,
                                             const WorkloadSpec& workload);

  // One scheduling pass; returns the ids just started. Called automatically
  // on submit and completion and by the periodic tick when enabled.
  std::vector<std::string> schedule_tick();

  enum class CompleteResult { ok, not_found, invalid_state };
  // Returns resources, charges the owner (cpus+gpus+qpus) * wall seconds,
  // and marks the job done or failed. Normally invoked by the workload
  // runner; exposed for tests that drive jobs manually.
  CompleteResult complete(const std::string& job_id, bool success,
                          const nlohmann::json& detail);

  enum class CancelResult { ok, not_found, invalid_state };
  CancelResult cancel(const std::string& job_id);  // pending jobs only

  std::optional<BatchJob> get_job(const std::string& job_id) const;
  ClusterStatus status() const;
  std::vector<SchedEvent> events() const;
  std::optional<UserAccount> account(const std::string& user) const;
  const SchedulerConfig& config() const { return config_; }

  void set_endpoint_health(std::size_t index, bool healthy);

  // Blocks until every submitted job is terminal (done/failed/cancelled),
  // or the timeout elapses. Returns true when fully drained.
  bool wait_all_terminal(double timeout_s) const;

 private:
  double decayed_usage_locked(const std::string& user, double now_s) const;
  void charge_usage_locked(const std::string& user, double amount, double now_s);
  std::vector<std::string> tick_locked();
  void log_event_locked(SchedEvent::Kind kind, const std::string& job_id);
  void run_workload(std::string job_id, WorkloadFn fn, WorkloadContext context);

  SchedulerConfig config_;
  WorkloadRegistry registry_;
  ClockFn clock_;

  mutable std::mutex mutex_;
  mutable std::condition_variable terminal_cv_;
  std::map<std::string, BatchJob> jobs_;
  std::vector<std::string> pending_;  // submission order; tick sorts a copy
  std::map<std::string, UserAccount> accounts_;
  std::vector<EndpointState> endpoints_;
  int free_cpus_ = 0;
  int free_gpus_ = 0;
  std::int64_t next_job_number_ = 1;
  std::int64_t next_submit_seq_ = 0;
  std::int64_t next_event_seq_ = 0;
  std::int64_t jobs_completed_ = 0;
  std::vector<SchedEvent> events_;
  std::vector<std::thread> workers_;
  bool stopping_ = false;

  std::thread ticker_;
};

}  // namespace photonq::sched
