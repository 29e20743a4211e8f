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

#include "photonq/qpu/device.hpp"

#include <utility>

namespace photonq::qpu {

const char* job_state_name(JobState state) {
  switch (state) {
    case JobState::queued: return "queued";
    case JobState::running: return "running";
    case JobState::completed: return "completed";
    case JobState::failed: return "failed";
  }
  return "unknown";
}

QpuDevice::QpuDevice(DeviceConfig config)
    : config_(std::move(config)),
      fallback_seed_rng_(std::random_device{}()),
      started_at_(std::chrono::steady_clock::now()),
      worker_([this] { run_loop(); }) {}

QpuDevice::~QpuDevice() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  work_cv_.notify_all();
  worker_.join();
}

std::int64_t QpuDevice::now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::variant<std::string, QpuDevice::Rejected> QpuDevice::submit(
    const fock::CircuitSpec& spec, std::optional<std::uint64_t> seed,
    const std::string& owner) {
  if (const auto rejection = fock::validate_against(spec, config_.limits())) {
    return Rejected{fock::reject_code_name(rejection->code), rejection->message};
  }

  std::lock_guard lock(mutex_);
  if (queue_.size() >= config_.queue_capacity) {
    return Rejected{"QUEUE_FULL", "queue at capacity (" +
                                      std::to_string(config_.queue_capacity) + ")"};
  }
  JobRecord record;
  record.job_id = config_.device_id + "-" + std::to_string(next_job_number_++);
  record.owner = owner;
  record.spec = spec;
  record.seed = seed;
  record.state = JobState::queued;
  record.submitted_at_ms = now_ms();
  record.accept_index = next_accept_index_++;
  const std::string job_id = record.job_id;
  jobs_.emplace(job_id, std::move(record));
  queue_.push_back(job_id);
  events_.push_back({DeviceEvent::Kind::accepted, job_id, next_event_seq_++});
  work_cv_.notify_one();
  return job_id;
}

std::optional<JobRecord> QpuDevice::get_job(const std::string& job_id) const {
  std::lock_guard lock(mutex_);
  const auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

QpuDevice::CancelResult QpuDevice::cancel(const std::string& job_id) {
  std::lock_guard lock(mutex_);
  const auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return CancelResult::not_found;
  if (it->second.state != JobState::queued) return CancelResult::invalid_state;
  for (auto queue_it = queue_.begin(); queue_it != queue_.end(); ++queue_it) {
    if (*queue_it == job_id) {
      queue_.erase(queue_it);
      break;
    }
  }
  it->second.state = JobState::failed;
  it->second.error = "cancelled";
  it->second.finished_at_ms = now_ms();
  events_.push_back({DeviceEvent::Kind::cancelled, job_id, next_event_seq_++});
  idle_cv_.notify_all();
  return CancelResult::ok;
}

DeviceStatus QpuDevice::status() const {
  std::lock_guard lock(mutex_);
  DeviceStatus status;
  status.device_id = config_.device_id;
  status.num_modes = config_.num_modes;
  status.max_photons = config_.max_photons;
  status.queue_depth = static_cast<std::int64_t>(queue_.size());
  status.jobs_completed = jobs_completed_;
  status.uptime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                  started_at_)
                        .count();
  status.busy = busy_;
  return status;
}

std::vector<DeviceEvent> QpuDevice::events() const {
  std::lock_guard lock(mutex_);
  return events_;
}

void QpuDevice::wait_idle() const {
  std::unique_lock lock(mutex_);
  idle_cv_.wait(lock, [this] { return queue_.empty() && !busy_; });
}

void QpuDevice::run_loop() {
  std::unique_lock lock(mutex_);
  while (true) {
    work_cv_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
    if (stopping_) return;

    const std::string job_id = queue_.front();
    queue_.pop_front();
    JobRecord& record = jobs_.at(job_id);
    record.state = JobState::running;
    record.started_at_ms = now_ms();
    record.start_index = next_start_index_++;
    events_.push_back({DeviceEvent::Kind::started, job_id, next_event_seq_++});
    busy_ = true;
    const fock::CircuitSpec spec = record.spec;
    const std::uint64_t seed =
        record.seed ? *record.seed : fallback_seed_rng_();
    lock.unlock();

    fock::Histogram result;
    std::string error;
    bool ok = true;
    try {
      result = fock::sample(spec, seed, config_.guard);
    } catch (const std::exception& e) {
      ok = false;
      error = e.what();
    }
    if (ok) {
      const double latency_ms =
          config_.base_latency_ms +
          config_.per_shot_latency_ms * static_cast<double>(spec.n_samples);
      if (latency_ms > 0) {
        std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(latency_ms));
      }
    }

    lock.lock();
    JobRecord& finished = jobs_.at(job_id);
    finished.finished_at_ms = now_ms();
    if (ok) {
      finished.state = JobState::completed;
      finished.result = std::move(result);
      ++jobs_completed_;
    } else {
      finished.state = JobState::failed;
      finished.error = error;
    }
    events_.push_back({DeviceEvent::Kind::finished, job_id, next_event_seq_++});
    busy_ = false;
    idle_cv_.notify_all();
  }
}

}  // namespace photonq::qpu
