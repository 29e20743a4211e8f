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

#include "photonq/sched/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace photonq::sched {

const char* batch_state_name(BatchState state) {
  switch (state) {
    case BatchState::pending: return "pending";
    case BatchState::running: return "running";
    case BatchState::done: return "done";
    case BatchState::failed: return "failed";
    case BatchState::cancelled: return "cancelled";
  }
  return "unknown";
}

namespace {

double steady_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

Cluster::Cluster(SchedulerConfig config, WorkloadRegistry registry, ClockFn clock)
    : config_(std::move(config)),
      registry_(std::move(registry)),
      clock_(clock ? std::move(clock) : ClockFn(steady_seconds)) {
  free_cpus_ = config_.cpus;
  free_gpus_ = config_.gpus;
  for (const auto& url : config_.qpu_endpoints) {
    endpoints_.push_back({url, true, ""});
  }
  if (config_.tick_interval_ms > 0) {
    ticker_ = std::thread([this] {
      const auto interval =
          std::chrono::duration<double, std::milli>(config_.tick_interval_ms);
      while (true) {
        {
          std::unique_lock lock(mutex_);
          if (terminal_cv_.wait_for(lock, interval, [this] { return stopping_; })) {
            return;
          }
        }
        schedule_tick();
      }
    });
  }
}

Cluster::~Cluster() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  terminal_cv_.notify_all();
  if (ticker_.joinable()) ticker_.join();
  // Workers can spawn successors through complete() -> schedule_tick();
  // drain in rounds until the list stays empty.
  while (true) {
    std::vector<std::thread> grabbed;
    {
      std::lock_guard lock(mutex_);
      grabbed.swap(workers_);
    }
    if (grabbed.empty()) break;
    for (auto& worker : grabbed) {
      if (worker.joinable()) worker.join();
    }
  }
}

double Cluster::decayed_usage_locked(const std::string& user, double now_s) const {
  const auto it = accounts_.find(user);
  if (it == accounts_.end()) return 0.0;
  const double elapsed = std::max(0.0, now_s - it->second.last_update_s);
  return it->second.decayed_usage *
         std::exp2(-elapsed / config_.usage_half_life_s);
}

void Cluster::charge_usage_locked(const std::string& user, double amount, double now_s) {
  UserAccount& account = accounts_[user];
  if (account.user.empty()) {
    account.user = user;
    const auto weight = config_.user_weights.find(user);
    account.share_weight =
        weight == config_.user_weights.end() ? 1.0 : weight->second;
  }
  account.decayed_usage = decayed_usage_locked(user, now_s) + amount;
  account.last_update_s = now_s;
}

void Cluster::log_event_locked(SchedEvent::Kind kind, const std::string& job_id) {
  SchedEvent event;
  event.kind = kind;
  event.job_id = job_id;
  event.seq = next_event_seq_++;
  event.free_cpus = free_cpus_;
  event.free_gpus = free_gpus_;
  event.qpu_holders.reserve(endpoints_.size());
  for (const auto& endpoint : endpoints_) event.qpu_holders.push_back(endpoint.holder);
  events_.push_back(std::move(event));
}

std::variant<std::string, Cluster::Rejected> Cluster::submit(
    const std::string& owner, const ResourceRequest& request,
    const WorkloadSpec& workload) {
  if (request.cpus < 0 || request.gpus < 0 || request.qpus < 0) {
    return Rejected{"BAD_REQUEST", "resource counts must be non-negative"};
  }
  if (request.cpus == 0 && request.gpus == 0 && request.qpus == 0) {
    return Rejected{"EMPTY_REQUEST", "request must name at least one resource"};
  }
  if (request.cpus > config_.cpus || request.gpus > config_.gpus ||
      request.qpus > static_cast<int>(endpoints_.size())) {
    return Rejected{"UNSATISFIABLE",
                    "request exceeds pool capacity (" + std::to_string(config_.cpus) +
                        " cpus, " + std::to_string(config_.gpus) + " gpus, " +
                        std::to_string(endpoints_.size()) + " qpus)"};
  }
  if (registry_.find(workload.name) == nullptr) {
    return Rejected{"BAD_WORKLOAD", "unknown workload: " + workload.name};
  }

  std::string job_id;
  {
    std::lock_guard lock(mutex_);
    const double now = clock_();
    BatchJob job;
    job.job_id = "batch-" + std::to_string(next_job_number_++);
    job.owner = owner;
    job.request = request;
    job.workload = workload;
    job.state = BatchState::pending;
    job.submit_seq = next_submit_seq_++;
    job.submitted_at_s = now;

    // Priority fixed at admission: fair share over decayed usage.
    const auto weight_it = config_.user_weights.find(owner);
    const double weight =
        accounts_.count(owner) ? accounts_[owner].share_weight
        : weight_it != config_.user_weights.end() ? weight_it->second
                                                  : 1.0;
    job.priority = weight / (1.0 + decayed_usage_locked(owner, now));

    job_id = job.job_id;
    pending_.push_back(job_id);
    jobs_.emplace(job_id, std::move(job));
    log_event_locked(SchedEvent::Kind::submitted, job_id);
  }
  schedule_tick();
  return job_id;
}

std::vector<std::string> Cluster::schedule_tick() {
  std::vector<std::string> started;
  std::vector<std::pair<WorkloadContext, WorkloadFn>> to_launch;
  {
    std::lock_guard lock(mutex_);
    started = tick_locked();
    for (const auto& job_id : started) {
      const BatchJob& job = jobs_.at(job_id);
      WorkloadContext context;
      context.job_id = job_id;
      context.owner = job.owner;
      context.allocation = *job.granted;
      context.params = job.workload.params;
      to_launch.emplace_back(std::move(context), *registry_.find(job.workload.name));
    }
    for (auto& [context, fn] : to_launch) {
      workers_.emplace_back(&Cluster::run_workload, this, context.job_id, fn, context);
    }
  }
  return started;
}

std::vector<std::string> Cluster::tick_locked() {
  if (stopping_) return {};
  // Scheduling order: priority descending, submission order on ties.
  std::vector<std::string> order = pending_;
  std::sort(order.begin(), order.end(), [this](const std::string& a, const std::string& b) {
    const BatchJob& ja = jobs_.at(a);
    const BatchJob& jb = jobs_.at(b);
    if (ja.priority != jb.priority) return ja.priority > jb.priority;
    return ja.submit_seq < jb.submit_seq;
  });

  std::vector<std::string> started;
  for (const auto& job_id : order) {
    BatchJob& job = jobs_.at(job_id);
    if (job.state != BatchState::pending) continue;

    std::vector<std::size_t> free_endpoints;
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
      if (endpoints_[i].healthy && endpoints_[i].holder.empty()) {
        free_endpoints.push_back(i);
      }
    }
    if (job.request.cpus > free_cpus_ || job.request.gpus > free_gpus_ ||
        static_cast<std::size_t>(job.request.qpus) > free_endpoints.size()) {
      continue;  // first fit: skip and try the next candidate
    }

    Allocation grant;
    grant.cpus = job.request.cpus;
    grant.gpus = job.request.gpus;
    for (int q = 0; q < job.request.qpus; ++q) {
      EndpointState& endpoint = endpoints_[free_endpoints[static_cast<std::size_t>(q)]];
      endpoint.holder = job_id;
      grant.qpu_endpoints.push_back(endpoint.url);
    }
    free_cpus_ -= grant.cpus;
    free_gpus_ -= grant.gpus;

    job.granted = std::move(grant);
    job.state = BatchState::running;
    job.started_at_s = clock_();
    pending_.erase(std::find(pending_.begin(), pending_.end(), job_id));
    log_event_locked(SchedEvent::Kind::started, job_id);
    started.push_back(job_id);
  }
  return started;
}

void Cluster::run_workload(std::string job_id, WorkloadFn fn, WorkloadContext context) {
  WorkloadResult result;
  try {
    result = fn(context);
  } catch (const std::exception& e) {
    result.ok = false;
    result.detail = nlohmann::json{{"error", e.what()}};
  }
  complete(job_id, result.ok, result.detail);
}

Cluster::CompleteResult Cluster::complete(const std::string& job_id, bool success,
                                          const nlohmann::json& detail) {
  {
    std::lock_guard lock(mutex_);
    const auto it = jobs_.find(job_id);
    if (it == jobs_.end()) return CompleteResult::not_found;
    BatchJob& job = it->second;
    if (job.state != BatchState::running) return CompleteResult::invalid_state;

    const double now = clock_();
    job.finished_at_s = now;
    job.state = success ? BatchState::done : BatchState::failed;
    if (success) {
      job.result = detail;
    } else {
      job.error = detail.is_object() && detail.contains("error")
                      ? detail.at("error").get<std::string>()
                      : detail.dump();
    }

    free_cpus_ += job.granted->cpus;
    free_gpus_ += job.granted->gpus;
    for (auto& endpoint : endpoints_) {
      if (endpoint.holder == job_id) endpoint.holder.clear();
    }

    const double wall = std::max(0.0, now - job.started_at_s);
    const double resources = static_cast<double>(job.request.cpus + job.request.gpus +
                                                 job.request.qpus);
    charge_usage_locked(job.owner, resources * wall, now);
    ++jobs_completed_;
    log_event_locked(SchedEvent::Kind::finished, job_id);
  }
  terminal_cv_.notify_all();
  schedule_tick();
  return CompleteResult::ok;
}

Cluster::CancelResult Cluster::cancel(const std::string& job_id) {
  std::lock_guard lock(mutex_);
  const auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return CancelResult::not_found;
  if (it->second.state != BatchState::pending) return CancelResult::invalid_state;
  it->second.state = BatchState::cancelled;
  it->second.finished_at_s = clock_();
  pending_.erase(std::find(pending_.begin(), pending_.end(), job_id));
  log_event_locked(SchedEvent::Kind::cancelled, job_id);
  terminal_cv_.notify_all();
  return CancelResult::ok;
}

std::optional<BatchJob> Cluster::get_job(const std::string& job_id) const {
  std::lock_guard lock(mutex_);
  const auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

ClusterStatus Cluster::status() const {
  std::lock_guard lock(mutex_);
  ClusterStatus status;
  status.cpus_total = config_.cpus;
  status.cpus_free = free_cpus_;
  status.gpus_total = config_.gpus;
  status.gpus_free = free_gpus_;
  status.qpus = endpoints_;
  status.pending = pending_;
  for (const auto& [id, job] : jobs_) {
    if (job.state == BatchState::running) status.running.push_back(id);
  }
  const double now = clock_();
  for (const auto& [user, account] : accounts_) {
    UserAccount snapshot = account;
    snapshot.decayed_usage = decayed_usage_locked(user, now);
    snapshot.last_update_s = now;
    status.users[user] = snapshot;
  }
  status.jobs_completed = jobs_completed_;
  return status;
}

std::vector<SchedEvent> Cluster::events() const {
  std::lock_guard lock(mutex_);
  return events_;
}

std::optional<UserAccount> Cluster::account(const std::string& user) const {
  std::lock_guard lock(mutex_);
  const auto it = accounts_.find(user);
  if (it == accounts_.end()) return std::nullopt;
  UserAccount snapshot = it->second;
  snapshot.decayed_usage = decayed_usage_locked(user, clock_());
  return snapshot;
}

void Cluster::set_endpoint_health(std::size_t index, bool healthy) {
  std::lock_guard lock(mutex_);
  endpoints_.at(index).healthy = healthy;
}

bool Cluster::wait_all_terminal(double timeout_s) const {
  std::unique_lock lock(mutex_);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(timeout_s));
  return terminal_cv_.wait_until(lock, deadline, [this] {
    for (const auto& [id, job] : jobs_) {
      if (job.state == BatchState::pending || job.state == BatchState::running) {
        return false;
      }
    }
    return true;
  });
}

}  // namespace photonq::sched
