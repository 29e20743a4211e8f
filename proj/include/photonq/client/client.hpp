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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "photonq/fock/circuit.hpp"
#include "photonq/fock/distribution.hpp"
#include "photonq/fock/fock_state.hpp"

namespace photonq::client {

struct SampleResult {
  fock::Histogram histogram;
  std::int64_t total_shots = 0;
  std::map<std::string, std::int64_t> per_endpoint_shots;
  double wall_time_s = 0.0;
};

enum class ErrorKind {
  transport,          // endpoint unreachable or protocol-level failure
  device_rejected,    // validation rejection with a device reason code
  job_failed,         // accepted job failed during execution
  no_capacity,        // no endpoint available to take the work
  partial_failure,    // some shards lost after the one-retry budget
  insufficient_data,  // estimator called on too few shots
};

class ClientError : public std::runtime_error {
 public:
  ClientError(ErrorKind kind, const std::string& message, std::string endpoint = {},
              std::string device_code = {})
      : std::runtime_error(message),
        kind_(kind),
        endpoint_(std::move(endpoint)),
        device_code_(std::move(device_code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& endpoint() const { return endpoint_; }
  // Reason code reported by the device (PHOTON_LIMIT, ANGLE_COUNT, ...).
  const std::string& device_code() const { return device_code_; }

 private:
  ErrorKind kind_;
  std::string endpoint_;
  std::string device_code_;
};

// Carries whatever merged shards survived.
class PartialFailureError : public ClientError {
 public:
  PartialFailureError(const std::string& message, SampleResult partial)
      : ClientError(ErrorKind::partial_failure, message), partial_(std::move(partial)) {}

  const SampleResult& partial() const { return partial_; }

 private:
  SampleResult partial_;
};

// Uniform sampling surface over a set of devices, HTTP or in-process.
// Hybrid algorithm drivers program against this.
class SamplerPool {
 public:
  virtual ~SamplerPool() = default;

  virtual std::size_t endpoint_count() const = 0;
  virtual std::string endpoint_name(std::size_t index) const = 0;

  // All shots on one endpoint.
  virtual SampleResult sample_on(std::size_t index, const fock::CircuitSpec& spec,
                                 std::uint64_t seed) = 0;

  // Shots split across available endpoints and merged. Shard i samples
  // with seed base_seed + i, so merged runs are reproducible while shards
  // stay statistically independent.
  virtual SampleResult sample_split(const fock::CircuitSpec& spec,
                                    std::uint64_t base_seed) = 0;
};

// Exact-physics devices executed in the calling thread with zero latency.
// Same validation surface as the HTTP device, so specs rejected there are
// rejected here with the same reason codes.
class LocalSamplerPool final : public SamplerPool {
 public:
  LocalSamplerPool(fock::DeviceLimits limits, std::size_t device_count,
                   fock::EnumerationGuard guard = {});

  std::size_t endpoint_count() const override { return device_count_; }
  std::string endpoint_name(std::size_t index) const override;
  SampleResult sample_on(std::size_t index, const fock::CircuitSpec& spec,
                         std::uint64_t seed) override;
  SampleResult sample_split(const fock::CircuitSpec& spec,
                            std::uint64_t base_seed) override;

 private:
  fock::DeviceLimits limits_;
  std::size_t device_count_;
  fock::EnumerationGuard guard_;
};

struct PollPolicy {
  double initial_ms = 10.0;
  double cap_ms = 500.0;
  double multiplier = 2.0;
};

struct SplitPolicy {
  enum class Kind { equal, weighted, all_to_one };
  Kind kind = Kind::equal;
  // Per-endpoint proportions for Kind::weighted; ignored otherwise. Missing
  // or non-positive weights drop the endpoint from the split.
  std::vector<double> weights;

  static SplitPolicy equal() { return {}; }
  static SplitPolicy all_to_one() { return {Kind::all_to_one, {}}; }
  static SplitPolicy weighted(std::vector<double> w) {
    return {Kind::weighted, std::move(w)};
  }
};

struct ClientOptions {
  std::string user = "anonymous";
  PollPolicy poll;
  double connect_timeout_s = 2.0;
  double read_timeout_s = 30.0;
};

// HTTP client over one or more device endpoints with per-endpoint health
// tracking, polling with exponential backoff, and concurrent shot
// splitting. Safe for concurrent use; the health map is the only shared
// mutable state and its updates are serialized.
class QpuClient final : public SamplerPool {
 public:
  explicit QpuClient(std::vector<std::string> endpoints, ClientOptions options = {});

  std::size_t endpoint_count() const override { return endpoints_.size(); }
  std::string endpoint_name(std::size_t index) const override;

  // Submit + poll to terminal state on one endpoint. Throws ClientError:
  // transport (unreachable endpoint, no retry), device_rejected
  // (validation reason code propagated), job_failed.
  SampleResult sample_sync(std::size_t index, const fock::CircuitSpec& spec,
                           std::optional<std::uint64_t> seed = std::nullopt);

  // Splits n_samples across healthy endpoints, submits concurrently, merges
  // key-wise. A shard that fails in flight is resubmitted once to a
  // surviving endpoint; beyond that PartialFailureError carries the merged
  // surviving shards. Validation rejections propagate immediately (every
  // identical device would reject the same way). Throws no_capacity when
  // every endpoint is down.
  SampleResult sample_multi(const fock::CircuitSpec& spec, std::uint64_t base_seed,
                            const SplitPolicy& policy = SplitPolicy::equal());

  SampleResult sample_on(std::size_t index, const fock::CircuitSpec& spec,
                         std::uint64_t seed) override {
    return sample_sync(index, spec, seed);
  }
  SampleResult sample_split(const fock::CircuitSpec& spec,
                            std::uint64_t base_seed) override {
    return sample_multi(spec, base_seed);
  }

  bool is_up(std::size_t index) const;
  void mark_health(std::size_t index, bool up);
  // GET /v1/admin/status against every endpoint, refreshing the health map.
  void probe_health();

 private:
  std::vector<std::int64_t> shard_sizes(std::int64_t total,
                                        const std::vector<std::size_t>& targets,
                                        const SplitPolicy& policy) const;

  std::vector<std::string> endpoints_;
  ClientOptions options_;
  mutable std::mutex health_mutex_;
  std::vector<bool> up_;
};

}  // namespace photonq::client
