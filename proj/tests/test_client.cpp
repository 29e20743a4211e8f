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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "photonq/client/client.hpp"
#include "photonq/client/observable.hpp"
#include "photonq/fock/distribution.hpp"
#include "photonq/qpu/device.hpp"
#include "photonq/qpu/service.hpp"

using namespace photonq;

namespace {

qpu::DeviceConfig fast_device(const std::string& id) {
  qpu::DeviceConfig config;
  config.device_id = id;
  config.base_latency_ms = 0.0;
  config.per_shot_latency_ms = 0.0;
  return config;
}

fock::CircuitSpec standard_spec(std::int64_t shots) {
  fock::CircuitSpec spec;
  spec.num_modes = 8;
  spec.loop_lengths = {1, 1};
  spec.bs_angles.assign(14, 0.4);
  spec.input_state = {1, 0, 1, 0, 1, 0, 1, 0};
  spec.n_samples = shots;
  return spec;
}

fock::CircuitSpec hom_spec(std::int64_t shots) {
  fock::CircuitSpec spec;
  spec.num_modes = 2;
  spec.loop_lengths = {1};
  spec.bs_angles = {std::numbers::pi / 4};
  spec.input_state = {1, 1};
  spec.n_samples = shots;
  return spec;
}

struct TwoDevices {
  TwoDevices()
      : dev_a(fast_device("a")), dev_b(fast_device("b")), srv_a(dev_a), srv_b(dev_b) {
    REQUIRE(srv_a.start(0) > 0);
    REQUIRE(srv_b.start(0) > 0);
  }
  qpu::QpuDevice dev_a;
  qpu::QpuDevice dev_b;
  qpu::QpuHttpServer srv_a;
  qpu::QpuHttpServer srv_b;

  std::vector<std::string> urls() const { return {srv_a.base_url(), srv_b.base_url()}; }
};

client::ClientOptions snappy_options() {
  client::ClientOptions options;
  options.poll = {2.0, 20.0, 2.0};
  options.connect_timeout_s = 0.5;
  return options;
}

}  // namespace

TEST_CASE("sample_sync returns full histograms and propagates rejections") {
  TwoDevices rig;
  client::QpuClient qc(rig.urls(), snappy_options());

  const auto result = qc.sample_sync(0, standard_spec(10000), 42);
  CHECK(result.total_shots == 10000);
  CHECK(fock::total_counts(result.histogram) == 10000);
  CHECK(result.per_endpoint_shots.size() == 1);
  CHECK(result.wall_time_s > 0.0);

  auto bad = standard_spec(100);
  bad.input_state = {2, 1, 1, 1, 0, 0, 0, 0};
  try {
    qc.sample_sync(0, bad, 1);
    FAIL("expected device_rejected");
  } catch (const client::ClientError& e) {
    CHECK(e.kind() == client::ErrorKind::device_rejected);
    CHECK(e.device_code() == "PHOTON_LIMIT");
  }
}

TEST_CASE("unreachable endpoint raises a transport error, no retry") {
  client::QpuClient qc({"http://127.0.0.1:1"}, snappy_options());
  try {
    qc.sample_sync(0, standard_spec(10), 1);
    FAIL("expected transport error");
  } catch (const client::ClientError& e) {
    CHECK(e.kind() == client::ErrorKind::transport);
    CHECK(e.endpoint() == "http://127.0.0.1:1");
  }
  CHECK_FALSE(qc.is_up(0));
}

TEST_CASE("sample_multi splits shots and merges exactly") {
  TwoDevices rig;
  client::QpuClient qc(rig.urls(), snappy_options());

  SUBCASE("even split") {
    const auto result = qc.sample_multi(standard_spec(10000), 7);
    CHECK(result.total_shots == 10000);
    CHECK(fock::total_counts(result.histogram) == 10000);
    REQUIRE(result.per_endpoint_shots.size() == 2);
    for (const auto& [endpoint, shots] : result.per_endpoint_shots) {
      CHECK(shots == 5000);
    }
  }

  SUBCASE("remainder goes to the first endpoint") {
    const auto result = qc.sample_multi(standard_spec(10001), 7);
    CHECK(result.total_shots == 10001);
    std::vector<std::int64_t> shots;
    for (const auto& [endpoint, count] : result.per_endpoint_shots) {
      shots.push_back(count);
    }
    std::sort(shots.begin(), shots.end());
    CHECK(shots == std::vector<std::int64_t>{5000, 5001});
  }

  SUBCASE("all_to_one policy") {
    const auto result =
        qc.sample_multi(standard_spec(400), 7, client::SplitPolicy::all_to_one());
    CHECK(result.per_endpoint_shots.size() == 1);
    CHECK(result.per_endpoint_shots.begin()->second == 400);
  }

  SUBCASE("weighted policy") {
    const auto result =
        qc.sample_multi(standard_spec(900), 7, client::SplitPolicy::weighted({2.0, 1.0}));
    REQUIRE(result.per_endpoint_shots.size() == 2);
    CHECK(result.per_endpoint_shots.at(rig.srv_a.base_url()) == 600);
    CHECK(result.per_endpoint_shots.at(rig.srv_b.base_url()) == 300);
  }
}

TEST_CASE("one endpoint down routes everything to the survivor") {
  qpu::QpuDevice device(fast_device("solo"));
  qpu::QpuHttpServer server(device);
  REQUIRE(server.start(0) > 0);

  client::QpuClient qc({server.base_url(), "http://127.0.0.1:1"}, snappy_options());
  const auto result = qc.sample_multi(standard_spec(10000), 3);
  CHECK(result.total_shots == 10000);
  CHECK(result.per_endpoint_shots.at(server.base_url()) == 10000);
  CHECK_FALSE(qc.is_up(1));

  // Second run: the down endpoint is skipped up front.
  const auto again = qc.sample_multi(standard_spec(100), 4);
  CHECK(again.per_endpoint_shots.size() == 1);
}

TEST_CASE("all endpoints down raises NO_CAPACITY") {
  client::QpuClient qc({"http://127.0.0.1:1", "http://127.0.0.1:2"}, snappy_options());
  try {
    qc.sample_multi(standard_spec(100), 1);
    FAIL("expected no_capacity");
  } catch (const client::ClientError& e) {
    CHECK(e.kind() == client::ErrorKind::no_capacity);
  }
}

TEST_CASE("merged two-endpoint statistics match single-endpoint physics") {
  TwoDevices rig;
  client::QpuClient qc(rig.urls(), snappy_options());
  fock::CircuitSpec spec = standard_spec(100000);

  const auto merged = qc.sample_multi(spec, 11);
  const auto single = qc.sample_sync(0, spec, 1700);
  const auto exact = fock::exact_distribution(spec);

  auto tv_against_exact = [&](const fock::Histogram& histogram) {
    double tv = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const auto it = histogram.find(exact.outcomes[i]);
      const double empirical =
          it == histogram.end() ? 0.0
                                : static_cast<double>(it->second) / spec.n_samples;
      tv += std::abs(empirical - exact.probabilities[i]);
    }
    return tv / 2.0;
  };
  CHECK(tv_against_exact(merged.histogram) < 0.02);
  CHECK(tv_against_exact(single.histogram) < 0.02);
}

TEST_CASE("local sampler pool mirrors the device contract") {
  client::LocalSamplerPool pool(fock::DeviceLimits{8, 4, 1000000, {}}, 2);
  CHECK(pool.endpoint_count() == 2);

  const auto split = pool.sample_split(standard_spec(10001), 5);
  CHECK(split.total_shots == 10001);
  CHECK(split.per_endpoint_shots.at("local:0") == 5001);
  CHECK(split.per_endpoint_shots.at("local:1") == 5000);

  auto bad = standard_spec(10);
  bad.input_state = {2, 1, 1, 1, 0, 0, 0, 0};
  try {
    pool.sample_on(0, bad, 1);
    FAIL("expected device_rejected");
  } catch (const client::ClientError& e) {
    CHECK(e.device_code() == "PHOTON_LIMIT");
  }

  // Deterministic: split twice with the same base seed.
  const auto again = pool.sample_split(standard_spec(10001), 5);
  CHECK(again.histogram == split.histogram);
}

TEST_CASE("observable estimation") {
  client::LocalSamplerPool pool(fock::DeviceLimits{2, 4, 1000000, {}}, 1);
  const auto result = pool.sample_on(0, hom_spec(100000), 21);

  // Photons in mode 0: exact mean is 1.0 under the balanced coupler.
  const auto estimate = client::estimate_observable(result, client::mode_occupation(0));
  CHECK(estimate.value == doctest::Approx(1.0).epsilon(0.02));
  CHECK(estimate.std_error > 0.0);

  // Constant observable: zero spread.
  const auto constant =
      client::estimate_observable(result, [](const fock::FockState&) { return 3.5; });
  CHECK(constant.value == doctest::Approx(3.5));
  CHECK(constant.std_error == doctest::Approx(0.0));

  client::SampleResult empty;
  empty.total_shots = 1;
  CHECK_THROWS_AS(client::estimate_observable(empty, client::mode_occupation(0)),
                  client::ClientError);
}

TEST_CASE("std_error shrinks like one over sqrt of shots") {
  client::LocalSamplerPool pool(fock::DeviceLimits{2, 4, 1000000, {}}, 2);
  double err_n = 0.0;
  double err_2n = 0.0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const auto small = pool.sample_on(0, hom_spec(2000), 1000 + t);
    const auto large = pool.sample_split(hom_spec(4000), 50000 + 2 * t);
    err_n += client::estimate_observable(small, client::mode_occupation(0)).std_error;
    err_2n += client::estimate_observable(large, client::mode_occupation(0)).std_error;
  }
  const double ratio = (err_2n / trials) / (err_n / trials);
  CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.15));
}
