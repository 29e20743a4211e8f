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

#include "photonq/client/client.hpp"

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <future>
#include <nlohmann/json.hpp>
#include <numeric>
#include <thread>

#include "photonq/fock/distribution.hpp"
#include "photonq/util/wire.hpp"

namespace photonq::client {

using nlohmann::json;

// ---------------------------------------------------------------------------
// LocalSamplerPool

LocalSamplerPool::LocalSamplerPool(fock::DeviceLimits limits, std::size_t device_count,
                                   fock::EnumerationGuard guard)
    : limits_(std::move(limits)), device_count_(device_count), guard_(guard) {
  if (device_count_ == 0) {
    throw std::invalid_argument("LocalSamplerPool needs at least one device");
  }
}

std::string LocalSamplerPool::endpoint_name(std::size_t index) const {
  return "local:" + std::to_string(index);
}

SampleResult LocalSamplerPool::sample_on(std::size_t index, const fock::CircuitSpec& spec,
                                         std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  if (const auto rejection = fock::validate_against(spec, limits_)) {
    throw ClientError(ErrorKind::device_rejected, rejection->message,
                      endpoint_name(index), fock::reject_code_name(rejection->code));
  }
  SampleResult result;
  try {
    result.histogram = fock::sample(spec, seed, guard_);
  } catch (const std::exception& e) {
    throw ClientError(ErrorKind::job_failed, e.what(), endpoint_name(index));
  }
  result.total_shots = spec.n_samples;
  result.per_endpoint_shots[endpoint_name(index)] = spec.n_samples;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SampleResult LocalSamplerPool::sample_split(const fock::CircuitSpec& spec,
                                            std::uint64_t base_seed) {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t shard_count =
      std::min<std::int64_t>(static_cast<std::int64_t>(device_count_), spec.n_samples);
  SampleResult merged;
  for (std::int64_t i = 0; i < shard_count; ++i) {
    fock::CircuitSpec shard = spec;
    shard.n_samples = spec.n_samples / shard_count +
                      (i < spec.n_samples % shard_count ? 1 : 0);
    if (shard.n_samples == 0) continue;
    const SampleResult part =
        sample_on(static_cast<std::size_t>(i), shard, base_seed + static_cast<std::uint64_t>(i));
    fock::merge_into(merged.histogram, part.histogram);
    merged.total_shots += part.total_shots;
    merged.per_endpoint_shots[endpoint_name(static_cast<std::size_t>(i))] =
        part.total_shots;
  }
  merged.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return merged;
}

// ---------------------------------------------------------------------------
// QpuClient

namespace {

std::unique_ptr<httplib::Client> make_http(const std::string& endpoint,
                                           const ClientOptions& options) {
  auto http = std::make_unique<httplib::Client>(endpoint);
  const auto connect_us = std::chrono::microseconds(
      static_cast<std::int64_t>(options.connect_timeout_s * 1e6));
  const auto read_us = std::chrono::microseconds(
      static_cast<std::int64_t>(options.read_timeout_s * 1e6));
  http->set_connection_timeout(connect_us);
  http->set_read_timeout(read_us);
  http->set_keep_alive(true);
  return http;
}

std::string reason_code_of(const std::string& body) {
  try {
    const json parsed = json::parse(body);
    return parsed.at("error").at("code").get<std::string>();
  } catch (...) {
    return "UNKNOWN";
  }
}

std::string reason_message_of(const std::string& body) {
  try {
    const json parsed = json::parse(body);
    return parsed.at("error").at("message").get<std::string>();
  } catch (...) {
    return body;
  }
}

}  // namespace

QpuClient::QpuClient(std::vector<std::string> endpoints, ClientOptions options)
    : endpoints_(std::move(endpoints)), options_(std::move(options)) {
  if (endpoints_.empty()) {
    throw std::invalid_argument("QpuClient needs at least one endpoint");
  }
  up_.assign(endpoints_.size(), true);
}

std::string QpuClient::endpoint_name(std::size_t index) const {
  return endpoints_.at(index);
}

bool QpuClient::is_up(std::size_t index) const {
  std::lock_guard lock(health_mutex_);
  return up_.at(index);
}

void QpuClient::mark_health(std::size_t index, bool up) {
  std::lock_guard lock(health_mutex_);
  up_.at(index) = up;
}

void QpuClient::probe_health() {
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    auto http = make_http(endpoints_[i], options_);
    const auto res = http->Get("/v1/admin/status");
    mark_health(i, res && res->status == 200);
  }
}

SampleResult QpuClient::sample_sync(std::size_t index, const fock::CircuitSpec& spec,
                                    std::optional<std::uint64_t> seed) {
  const std::string& endpoint = endpoints_.at(index);
  const auto start = std::chrono::steady_clock::now();
  auto http = make_http(endpoint, options_);

  httplib::Headers headers{{"X-User", options_.user}};
  const auto post = http->Post("/v1/jobs", headers,
                               wire::spec_to_json(spec, seed).dump(), "application/json");
  if (!post) {
    mark_health(index, false);
    throw ClientError(ErrorKind::transport,
                      "endpoint unreachable: " + endpoint + " (" +
                          httplib::to_string(post.error()) + ")",
                      endpoint);
  }
  if (post->status != 201) {
    throw ClientError(ErrorKind::device_rejected,
                      "device rejected job: " + reason_message_of(post->body), endpoint,
                      reason_code_of(post->body));
  }
  const std::string job_id = json::parse(post->body).at("job_id").get<std::string>();

  double backoff_ms = options_.poll.initial_ms;
  while (true) {
    std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(backoff_ms));
    backoff_ms = std::min(backoff_ms * options_.poll.multiplier, options_.poll.cap_ms);

    const auto poll = http->Get("/v1/jobs/" + job_id + "/results");
    if (!poll) {
      mark_health(index, false);
      throw ClientError(ErrorKind::transport,
                        "lost endpoint while polling: " + endpoint, endpoint);
    }
    if (poll->status == 409) continue;  // not terminal yet
    if (poll->status != 200) {
      throw ClientError(ErrorKind::transport,
                        "unexpected poll status " + std::to_string(poll->status), endpoint);
    }
    const json body = json::parse(poll->body);
    const std::string state = body.at("state").get<std::string>();
    if (state == "failed") {
      throw ClientError(ErrorKind::job_failed,
                        body.value("error", std::string("job failed")), endpoint);
    }
    SampleResult result;
    result.histogram = wire::histogram_from_json(body.at("histogram"));
    result.total_shots = spec.n_samples;
    result.per_endpoint_shots[endpoint] = spec.n_samples;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
}

std::vector<std::int64_t> QpuClient::shard_sizes(std::int64_t total,
                                                 const std::vector<std::size_t>& targets,
                                                 const SplitPolicy& policy) const {
  const std::size_t k = targets.size();
  std::vector<std::int64_t> sizes(k, 0);
  switch (policy.kind) {
    case SplitPolicy::Kind::all_to_one:
      sizes[0] = total;
      break;
    case SplitPolicy::Kind::weighted: {
      double weight_sum = 0.0;
      std::vector<double> weights(k, 0.0);
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t endpoint = targets[i];
        if (endpoint < policy.weights.size() && policy.weights[endpoint] > 0.0) {
          weights[i] = policy.weights[endpoint];
          weight_sum += weights[i];
        }
      }
      if (weight_sum <= 0.0) {
        throw ClientError(ErrorKind::no_capacity,
                          "weighted split has no positive weight on a healthy endpoint");
      }
      std::int64_t assigned = 0;
      for (std::size_t i = 0; i < k; ++i) {
        sizes[i] = static_cast<std::int64_t>(total * (weights[i] / weight_sum));
        assigned += sizes[i];
      }
      // Leftover from rounding goes to the heaviest shards first.
      for (std::size_t i = 0; assigned < total; i = (i + 1) % k) {
        if (weights[i] > 0.0) {
          ++sizes[i];
          ++assigned;
        }
      }
      break;
    }
    case SplitPolicy::Kind::equal:
    default: {
      const auto kk = static_cast<std::int64_t>(k);
      for (std::size_t i = 0; i < k; ++i) {
        sizes[i] = total / kk + (static_cast<std::int64_t>(i) < total % kk ? 1 : 0);
      }
      break;
    }
  }
  return sizes;
}

SampleResult QpuClient::sample_multi(const fock::CircuitSpec& spec,
                                     std::uint64_t base_seed, const SplitPolicy& policy) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::size_t> healthy;
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    if (is_up(i)) healthy.push_back(i);
  }
  if (healthy.empty()) {
    probe_health();
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
      if (is_up(i)) healthy.push_back(i);
    }
  }
  if (healthy.empty()) {
    throw ClientError(ErrorKind::no_capacity, "all endpoints down");
  }

  const auto sizes = shard_sizes(spec.n_samples, healthy, policy);

  struct Shard {
    std::size_t endpoint;
    std::int64_t shots;
    std::uint64_t seed;
  };
  std::vector<Shard> shards;
  for (std::size_t i = 0; i < healthy.size(); ++i) {
    if (sizes[i] > 0) {
      shards.push_back(
          {healthy[i], sizes[i], base_seed + static_cast<std::uint64_t>(shards.size())});
    }
  }

  struct ShardOutcome {
    bool ok = false;
    bool rejected = false;  // deterministic validation rejection: do not retry
    SampleResult result;
    std::string message;
    std::string device_code;
  };

  auto run_shard = [this, &spec](const Shard& shard) {
    ShardOutcome outcome;
    fock::CircuitSpec shard_spec = spec;
    shard_spec.n_samples = shard.shots;
    try {
      outcome.result = sample_sync(shard.endpoint, shard_spec, shard.seed);
      outcome.ok = true;
    } catch (const ClientError& e) {
      outcome.message = e.what();
      outcome.device_code = e.device_code();
      outcome.rejected = e.kind() == ErrorKind::device_rejected;
    }
    return outcome;
  };

  std::vector<std::future<ShardOutcome>> futures;
  futures.reserve(shards.size());
  for (const Shard& shard : shards) {
    futures.push_back(std::async(std::launch::async, run_shard, shard));
  }
  std::vector<ShardOutcome> outcomes;
  outcomes.reserve(shards.size());
  for (auto& fut : futures) outcomes.push_back(fut.get());

  for (const ShardOutcome& outcome : outcomes) {
    if (outcome.rejected) {
      throw ClientError(ErrorKind::device_rejected, outcome.message, "",
                        outcome.device_code);
    }
  }

  // One retry per failed shard, on an endpoint that just delivered.
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < shards.size(); ++i) {
    if (outcomes[i].ok) survivors.push_back(shards[i].endpoint);
  }
  std::vector<std::string> lost_messages;
  std::size_t next_survivor = 0;
  for (std::size_t i = 0; i < shards.size(); ++i) {
    if (outcomes[i].ok) continue;
    if (survivors.empty()) {
      lost_messages.push_back(outcomes[i].message);
      continue;
    }
    Shard retry = shards[i];
    retry.endpoint = survivors[next_survivor];
    next_survivor = (next_survivor + 1) % survivors.size();
    const ShardOutcome retried = run_shard(retry);
    if (retried.ok) {
      outcomes[i] = retried;
    } else {
      lost_messages.push_back(retried.message);
    }
  }

  SampleResult merged;
  for (const ShardOutcome& outcome : outcomes) {
    if (!outcome.ok) continue;
    fock::merge_into(merged.histogram, outcome.result.histogram);
    merged.total_shots += outcome.result.total_shots;
    for (const auto& [endpoint, shots] : outcome.result.per_endpoint_shots) {
      merged.per_endpoint_shots[endpoint] += shots;
    }
  }
  merged.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!lost_messages.empty()) {
    if (merged.total_shots == 0) {
      throw ClientError(ErrorKind::no_capacity,
                        "every shard failed: " + lost_messages.front());
    }
    throw PartialFailureError("lost " + std::to_string(lost_messages.size()) +
                                  " shard(s) after retry: " + lost_messages.front(),
                              std::move(merged));
  }
  return merged;
}

}  // namespace photonq::client
