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

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <variant>
#include <vector>

#include "photonq/fock/circuit.hpp"
#include "photonq/fock/distribution.hpp"
#include "photonq/fock/fock_state.hpp"

namespace photonq::qpu {

struct DeviceConfig {
  std::string device_id = "qpu0";
  int num_modes = 8;
  int max_photons = 4;
  std::int64_t max_shots = 10'000'000;
  std::vector<int> allowed_loop_lengths;  // empty: any structurally valid
  double base_latency_ms = 50.0;
  double per_shot_latency_ms = 0.1;
  std::size_t queue_capacity = 1024;
  fock::EnumerationGuard guard;

  fock::DeviceLimits limits() const {
    return {num_modes, max_photons, max_shots, allowed_loop_lengths};
  }
};

enum class JobState { queued, running, completed, failed };

const char* job_state_name(JobState state);

struct JobRecord {
  std::string job_id;
  std::string owner;
  fock::CircuitSpec spec;
  std::optional<std::uint64_t> seed;
  JobState state = JobState::queued;
  std::int64_t submitted_at_ms = 0;  // epoch milliseconds; 0 = unset
  std::int64_t started_at_ms = 0;
  std::int64_t finished_at_ms = 0;
  std::int64_t accept_index = -1;  // order accepted by the device
  std::int64_t start_index = -1;   // order started by the executor
  fock::Histogram result;          // populated iff completed
  std::string error;               // populated iff failed
};

struct DeviceStatus {
  std::string device_id;
  int num_modes = 0;
  int max_photons = 0;
  std::int64_t queue_depth = 0;
  std::int64_t jobs_completed = 0;
  double uptime_s = 0.0;
  bool busy = false;
};

// Linearized accept/start/finish/cancel log, appended under the state lock.
// Tests replay it to check FIFO order and single execution.
struct DeviceEvent {
  enum class Kind { accepted, started, finished, cancelled };
  Kind kind;
  std::string job_id;
  std::int64_t seq = 0;
};

// One emulated photonic processor: validates submissions against the device
// envelope, queues them FIFO, and executes them one at a time on an internal
// worker thread with a configurable artificial latency
// (base + per_shot * n_samples). All state mutations are serialized behind
// one mutex; accessors return immutable snapshots.
class QpuDevice {
 public:
  explicit QpuDevice(DeviceConfig config);
  ~QpuDevice();

  QpuDevice(const QpuDevice&) = delete;
  QpuDevice& operator=(const QpuDevice&) = delete;

  struct Rejected {
    std::string code;
    std::string message;
  };

  // Returns the job id, or a rejection (validation reason code, or
  // QUEUE_FULL when at capacity). Never blocks on execution.
  std::variant<std::string, Rejected> submit(const fock::CircuitSpec& spec,
                                             std::optional<std::uint64_t> seed,
                                             const std::string& owner);

  std::optional<JobRecord> get_job(const std::string& job_id) const;

  enum class CancelResult { ok, not_found, invalid_state };
  // Queued jobs only; a cancelled job is recorded as failed with error
  // "cancelled".
  CancelResult cancel(const std::string& job_id);

  DeviceStatus status() const;
  std::vector<DeviceEvent> events() const;
  const DeviceConfig& config() const { return config_; }

  // Blocks until the queue is drained and the executor is idle.
  void wait_idle() const;

 private:
  void run_loop();
  static std::int64_t now_ms();

  DeviceConfig config_;
  mutable std::mutex mutex_;
  std::condition_variable work_cv_;
  mutable std::condition_variable idle_cv_;
  std::deque<std::string> queue_;
  std::unordered_map<std::string, JobRecord> jobs_;
  std::vector<DeviceEvent> events_;
  std::mt19937_64 fallback_seed_rng_;  // jobs without an explicit seed
  std::int64_t next_job_number_ = 1;
  std::int64_t next_accept_index_ = 0;
  std::int64_t next_start_index_ = 0;
  std::int64_t next_event_seq_ = 0;
  std::int64_t jobs_completed_ = 0;
  bool busy_ = false;
  bool stopping_ = false;
  std::chrono::steady_clock::time_point started_at_;
  std::thread worker_;
};

}  // namespace photonq::qpu
