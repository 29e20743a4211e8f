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

// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. --list shows the criteria, --only N runs a single one.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "photonq/cli/selfhost.hpp"
#include "photonq/cli/submit.hpp"
#include "photonq/client/client.hpp"
#include "photonq/client/observable.hpp"
#include "photonq/fock/circuit.hpp"
#include "photonq/fock/distribution.hpp"
#include "photonq/fock/permanent.hpp"
#include "photonq/hybrid/bbs.hpp"
#include "photonq/hybrid/ptlayer.hpp"
#include "photonq/hybrid/qnas.hpp"
#include "photonq/hybrid/qubo.hpp"
#include "photonq/hybrid/workloads.hpp"
#include "photonq/qpu/device.hpp"
#include "photonq/qpu/service.hpp"
#include "photonq/sched/scheduler.hpp"
#include "photonq/sched/service.hpp"
#include "photonq/util/rng.hpp"
#include "photonq/util/wire.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

using namespace photonq;
using nlohmann::json;

#ifndef IRIS_CSV_PATH
#define IRIS_CSV_PATH "data/iris.csv"
#endif

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Physics oracle: Ryser permanent vs naive permutation sum.

bool criterion_permanent(std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(20260809);
  std::uniform_int_distribution<int> size_dist(1, 6);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size_dist(gen);
    const auto matrix = oracle::random_complex_matrix(n, gen);
    const auto expected = oracle::naive_permanent(matrix);
    const auto actual = fock::permanent(matrix);
    const double scale = std::max(1.0, std::abs(expected));
    worst = std::max(worst, std::abs(actual - expected) / scale);
  }
  const double elapsed = seconds_since(t0);
  out << "500 matrices up to 6x6, worst relative error " << worst << ", " << elapsed
      << " s";
  return worst < 1e-9 && elapsed < 5.0;
}

// ---------------------------------------------------------------------------
// 2. Normalization over the device envelope (M <= 8, n <= 4).

fock::CircuitSpec random_guarded_spec(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> mode_dist(2, 8);
  fock::CircuitSpec spec;
  spec.num_modes = mode_dist(gen);
  std::uniform_int_distribution<int> loops_dist(1, 2);
  std::uniform_int_distribution<int> loop_len(1, std::max(1, spec.num_modes - 1));
  const int loops = loops_dist(gen);
  for (int i = 0; i < loops; ++i) spec.loop_lengths.push_back(loop_len(gen));
  const std::size_t angles = fock::expected_angle_count(spec.num_modes, spec.loop_lengths);
  for (std::size_t i = 0; i < angles; ++i) {
    spec.bs_angles.push_back(rng::uniform(gen, 0.0, 2.0 * std::numbers::pi));
  }
  std::uniform_int_distribution<int> photon_dist(0, 4);
  spec.input_state.assign(static_cast<std::size_t>(spec.num_modes), 0);
  std::uniform_int_distribution<int> pick(0, spec.num_modes - 1);
  const int photons = photon_dist(gen);
  for (int p = 0; p < photons; ++p) spec.input_state[static_cast<std::size_t>(pick(gen))]++;
  spec.n_samples = 1;
  return spec;
}

bool criterion_normalization(std::ostream& out) {
  std::mt19937_64 gen(77);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = random_guarded_spec(gen);
    const auto dist = fock::exact_distribution(spec);
    const double sum =
        std::accumulate(dist.probabilities.begin(), dist.probabilities.end(), 0.0);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  out << "200 random circuits, worst |sum-1| = " << worst;
  return worst < 1e-9;
}

// ---------------------------------------------------------------------------
// 3. Hong-Ou-Mandel.

bool criterion_hom(std::ostream& out) {
  fock::CircuitSpec spec;
  spec.num_modes = 2;
  spec.loop_lengths = {1};
  spec.bs_angles = {std::numbers::pi / 4};
  spec.input_state = {1, 1};
  spec.n_samples = 10000;

  const auto dist = fock::exact_distribution(spec);
  const double p11 = dist.probability_of({1, 1});
  const auto histogram = fock::sample(spec, 4242);
  const auto it = histogram.find({1, 1});
  const std::int64_t count = it == histogram.end() ? 0 : it->second;
  out << "exact P(1,1) = " << p11 << ", seeded count over 10000 shots = " << count;
  return p11 <= 1e-12 && count == 0;
}

// ---------------------------------------------------------------------------
// 4. Fig 3 parameter count at the device boundary.

bool criterion_angle_count(std::ostream& out) {
  qpu::DeviceConfig config;
  config.base_latency_ms = 0;
  config.per_shot_latency_ms = 0;
  qpu::QpuDevice device(config);

  fock::CircuitSpec spec;
  spec.num_modes = 8;
  spec.loop_lengths = {1, 1};
  spec.input_state = {1, 0, 1, 0, 1, 0, 1, 0};
  spec.n_samples = 10;

  spec.bs_angles.assign(14, 0.3);
  const bool ok14 = std::holds_alternative<std::string>(device.submit(spec, 1, "a"));

  auto reject_code = [&](std::size_t angles) {
    spec.bs_angles.assign(angles, 0.3);
    const auto outcome = device.submit(spec, 1, "a");
    const auto* rejected = std::get_if<qpu::QpuDevice::Rejected>(&outcome);
    return rejected ? rejected->code : std::string("ACCEPTED");
  };
  const std::string at13 = reject_code(13);
  const std::string at15 = reject_code(15);
  device.wait_idle();
  out << "14 angles accepted = " << ok14 << ", 13 -> " << at13 << ", 15 -> " << at15;
  return ok14 && at13 == "ANGLE_COUNT" && at15 == "ANGLE_COUNT";
}

// ---------------------------------------------------------------------------
// 5. FIFO start order at the device + no oversubscription at the scheduler,
//    both under 50 concurrent submitters and 500 jobs.

bool criterion_fifo_exclusivity(std::ostream& out) {
  // Device side, over HTTP.
  qpu::DeviceConfig config;
  config.base_latency_ms = 0;
  config.per_shot_latency_ms = 0;
  config.queue_capacity = 4096;
  qpu::QpuDevice device(config);
  qpu::QpuHttpServer server(device);
  if (server.start(0) <= 0) {
    out << "failed to bind device service";
    return false;
  }

  fock::CircuitSpec spec;
  spec.num_modes = 8;
  spec.loop_lengths = {1};
  spec.bs_angles.assign(7, 0.2);
  spec.input_state = {1, 0, 0, 0, 0, 0, 0, 0};
  spec.n_samples = 1;
  const std::string body = wire::spec_to_json(spec, 9).dump();

  std::atomic<int> accepted{0};
  std::vector<std::thread> submitters;
  for (int t = 0; t < 50; ++t) {
    submitters.emplace_back([&, t] {
      httplib::Client http(server.base_url());
      for (int i = 0; i < 10; ++i) {
        httplib::Headers headers{{"X-User", "user" + std::to_string(t)}};
        const auto res = http.Post("/v1/jobs", headers, body, "application/json");
        if (res && res->status == 201) ++accepted;
      }
    });
  }
  for (auto& thread : submitters) thread.join();
  device.wait_idle();
  server.stop();

  // Replay the device event log.
  std::vector<std::string> accept_order;
  std::size_t next = 0;
  int running = 0;
  bool fifo_ok = true;
  bool exclusive_ok = true;
  for (const auto& event : device.events()) {
    switch (event.kind) {
      case qpu::DeviceEvent::Kind::accepted:
        accept_order.push_back(event.job_id);
        break;
      case qpu::DeviceEvent::Kind::started:
        if (next >= accept_order.size() || accept_order[next] != event.job_id) {
          fifo_ok = false;
        }
        ++next;
        if (++running > 1) exclusive_ok = false;
        break;
      case qpu::DeviceEvent::Kind::finished:
        --running;
        break;
      default:
        break;
    }
  }
  const bool device_ok = fifo_ok && exclusive_ok && accepted.load() == 500 &&
                         device.status().jobs_completed == 500;

  // Scheduler side, 50 submitters x 10 jobs with random mixed requests.
  sched::SchedulerConfig cluster_config;
  cluster_config.cpus = 6;
  cluster_config.gpus = 3;
  cluster_config.qpu_endpoints = {"http://q0", "http://q1", "http://q2"};
  cluster_config.tick_interval_ms = 0;
  sched::WorkloadRegistry registry;
  registry.add("nap", [](const sched::WorkloadContext& context) {
    std::this_thread::sleep_for(
        std::chrono::milliseconds(context.params.value("ms", 1)));
    return sched::WorkloadResult{true, json::object()};
  });
  sched::Cluster cluster(cluster_config, std::move(registry));

  std::atomic<int> cluster_accepted{0};
  std::vector<std::thread> batch_submitters;
  for (int t = 0; t < 50; ++t) {
    batch_submitters.emplace_back([&cluster, &cluster_accepted, t] {
      std::mt19937 gen(static_cast<unsigned>(1000 + t));
      std::uniform_int_distribution<int> cpu(0, 3);
      std::uniform_int_distribution<int> gpu(0, 2);
      std::uniform_int_distribution<int> qpu(0, 3);
      std::uniform_int_distribution<int> nap(1, 3);
      for (int i = 0; i < 10; ++i) {
        sched::ResourceRequest request{cpu(gen), gpu(gen), qpu(gen)};
        if (request.cpus + request.gpus + request.qpus == 0) request.cpus = 1;
        if (std::holds_alternative<std::string>(
                cluster.submit("user" + std::to_string(t), request,
                               {"nap", json{{"ms", nap(gen)}}}))) {
          ++cluster_accepted;
        }
      }
    });
  }
  for (auto& thread : batch_submitters) thread.join();
  const bool drained = cluster.wait_all_terminal(120.0);

  int used_cpus = 0;
  int used_gpus = 0;
  bool pool_ok = true;
  std::map<std::string, sched::ResourceRequest> running_jobs;
  for (const auto& event : cluster.events()) {
    if (event.kind == sched::SchedEvent::Kind::started) {
      const auto job = cluster.get_job(event.job_id);
      running_jobs[event.job_id] = job->request;
      used_cpus += job->request.cpus;
      used_gpus += job->request.gpus;
    } else if (event.kind == sched::SchedEvent::Kind::finished) {
      used_cpus -= running_jobs.at(event.job_id).cpus;
      used_gpus -= running_jobs.at(event.job_id).gpus;
      running_jobs.erase(event.job_id);
    }
    if (used_cpus > cluster_config.cpus || used_gpus > cluster_config.gpus ||
        event.free_cpus != cluster_config.cpus - used_cpus ||
        event.free_gpus != cluster_config.gpus - used_gpus) {
      pool_ok = false;
    }
    int held = 0;
    for (const auto& holder : event.qpu_holders) {
      if (!holder.empty()) {
        ++held;
        if (!running_jobs.count(holder)) pool_ok = false;
      }
    }
    int requested = 0;
    for (const auto& [id, request] : running_jobs) requested += request.qpus;
    if (held != requested) pool_ok = false;  // license conservation
  }
  const bool sched_ok = pool_ok && drained && cluster_accepted.load() == 500;

  out << "device: 500 accepted, FIFO " << (fifo_ok ? "ok" : "VIOLATED")
      << ", single-execution " << (exclusive_ok ? "ok" : "VIOLATED")
      << "; scheduler: 500 accepted, invariants " << (pool_ok ? "ok" : "VIOLATED");
  return device_ok && sched_ok;
}

// ---------------------------------------------------------------------------
// 6. Fig 5 wall-clock speedup over real HTTP with the stated latency model.

bool criterion_speedup(std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  qpu::DeviceConfig base;
  base.device_id = "spd";
  base.base_latency_ms = 50.0;
  base.per_shot_latency_ms = 0.1;
  cli::SelfHostedQpus rig(2, base);

  fock::CircuitSpec spec;
  spec.num_modes = 8;
  spec.loop_lengths = {1, 1};
  spec.bs_angles.assign(14, 0.4);
  spec.input_state = {1, 0, 1, 0, 1, 0, 1, 0};
  spec.n_samples = 20000;

  client::QpuClient pool(rig.urls());
  const auto single = pool.sample_sync(0, spec, 1);
  const auto split = pool.sample_multi(spec, 2);
  const double ratio = split.wall_time_s / single.wall_time_s;
  const double elapsed = seconds_since(t0);
  out << "1 endpoint " << single.wall_time_s << " s, 2 endpoints " << split.wall_time_s
      << " s, ratio " << ratio << " (need <= 0.6), check took " << elapsed << " s";
  return ratio <= 0.6 && elapsed < 30.0 &&
         split.total_shots == 20000 && single.total_shots == 20000;
}

// ---------------------------------------------------------------------------
// 7. Fig 5 variance: fixed wall-clock budget -> twice the shots on two
//    endpoints -> std_error scales by 1/sqrt(2).

bool criterion_variance(std::ostream& out) {
  // Budget arithmetic from the latency model (base 50 ms, 0.1 ms/shot,
  // 200 ms budget): one endpoint fits 1500 shots, two endpoints 3000.
  const double budget_ms = 200.0;
  const double base_ms = 50.0;
  const double per_shot_ms = 0.1;
  const auto shots_one =
      static_cast<std::int64_t>((budget_ms - base_ms) / per_shot_ms);
  const auto shots_two = 2 * shots_one;

  fock::CircuitSpec spec;
  spec.num_modes = 2;
  spec.loop_lengths = {1};
  spec.bs_angles = {std::numbers::pi / 3};
  spec.input_state = {1, 1};

  client::LocalSamplerPool one(fock::DeviceLimits{2, 4, 10'000'000, {}}, 1);
  client::LocalSamplerPool two(fock::DeviceLimits{2, 4, 10'000'000, {}}, 2);

  double sum_err_one = 0.0;
  double sum_err_two = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    fock::CircuitSpec spec_one = spec;
    spec_one.n_samples = shots_one;
    fock::CircuitSpec spec_two = spec;
    spec_two.n_samples = shots_two;
    const auto result_one =
        one.sample_on(0, spec_one, 10000 + static_cast<std::uint64_t>(trial));
    const auto result_two =
        two.sample_split(spec_two, 20000 + 2 * static_cast<std::uint64_t>(trial));
    sum_err_one +=
        client::estimate_observable(result_one, client::mode_occupation(0)).std_error;
    sum_err_two +=
        client::estimate_observable(result_two, client::mode_occupation(0)).std_error;
  }
  const double ratio = sum_err_two / sum_err_one;
  const double target = 1.0 / std::sqrt(2.0);
  out << "budget " << budget_ms << " ms -> " << shots_one << " vs " << shots_two
      << " shots; mean std_error ratio " << ratio << " (target " << target
      << " +/- 15%)";
  return std::abs(ratio - target) <= 0.15 * target;
}

// ---------------------------------------------------------------------------
// 8. BBS oracle runs.

std::vector<hybrid::WeightedEdge> matching_union_graph(int vertices, int degree,
                                                       std::mt19937_64& gen) {
  std::vector<hybrid::WeightedEdge> edges;
  std::vector<int> order(static_cast<std::size_t>(vertices));
  std::iota(order.begin(), order.end(), 0);
  for (int d = 0; d < degree; ++d) {
    std::shuffle(order.begin(), order.end(), gen);
    for (int i = 0; i + 1 < vertices; i += 2) {
      const int a = order[static_cast<std::size_t>(i)];
      const int b = order[static_cast<std::size_t>(i + 1)];
      edges.push_back({std::min(a, b), std::max(a, b), 1.0});
    }
  }
  return edges;
}

double greedy_local_search_cut(const std::vector<hybrid::WeightedEdge>& edges, int v) {
  std::vector<int> assignment(static_cast<std::size_t>(v), 0);
  double cut = hybrid::cut_value(edges, assignment);
  while (true) {
    double best_gain = 0.0;
    int best_flip = -1;
    for (int i = 0; i < v; ++i) {
      assignment[static_cast<std::size_t>(i)] ^= 1;
      const double flipped = hybrid::cut_value(edges, assignment);
      assignment[static_cast<std::size_t>(i)] ^= 1;
      if (flipped - cut > best_gain + 1e-12) {
        best_gain = flipped - cut;
        best_flip = i;
      }
    }
    if (best_flip < 0) break;
    assignment[static_cast<std::size_t>(best_flip)] ^= 1;
    cut += best_gain;
  }
  return cut;
}

bool criterion_bbs(std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  client::LocalSamplerPool pool(fock::DeviceLimits{8, 4, 10'000'000, {}}, 2);

  int optimal_hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 gen(seed * 7);
    const auto edges = matching_union_graph(12, 3, gen);
    const auto problem = hybrid::qubo_from_maxcut(edges, 12);
    const auto [optimum, argmin] = oracle::brute_force_qubo_min(problem.matrix(), 0.0);

    hybrid::BbsConfig config;
    config.seed = seed;
    config.max_iterations = 200;
    const auto state = hybrid::bbs_solve(problem, hybrid::Tiling::contiguous(12, 8),
                                         pool, config);
    if (std::abs(state.best_energy - optimum) < 1e-9) ++optimal_hits;
  }
  const double v12_elapsed = seconds_since(t0);

  int baseline_wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 gen(seed * 13);
    const auto edges = matching_union_graph(30, 3, gen);
    const auto problem = hybrid::qubo_from_maxcut(edges, 30);
    const double baseline = greedy_local_search_cut(edges, 30);

    hybrid::BbsConfig config;
    config.seed = seed;
    config.max_iterations = 400;
    const auto state = hybrid::bbs_solve(problem, hybrid::Tiling::contiguous(30, 8),
                                         pool, config);
    if (-state.best_energy >= baseline - 1e-9) ++baseline_wins;
  }
  out << "V=12: " << optimal_hits << "/10 brute-force optima in " << v12_elapsed
      << " s (need >= 8, < 300 s); V=30: " << baseline_wins
      << "/10 >= greedy baseline (need >= 7)";
  return optimal_hits >= 8 && v12_elapsed < 300.0 && baseline_wins >= 7;
}

// ---------------------------------------------------------------------------
// 9. PTLayer gradient consistency + conservation identity.

bool criterion_ptlayer(std::ostream& out) {
  std::mt19937_64 gen(55);
  double worst_consistency = 0.0;
  double worst_conservation = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    hybrid::PtLayer layer;
    std::uniform_int_distribution<int> mode_dist(3, 5);
    layer.device.num_modes = mode_dist(gen);
    layer.device.loop_lengths = {1, 1};
    layer.device.input_state =
        hybrid::alternating_input(layer.device.num_modes, 2);
    layer.angles.resize(layer.device.angle_count());
    for (auto& angle : layer.angles) {
      angle = rng::uniform(gen, 0.0, 2.0 * std::numbers::pi);
    }
    std::vector<double> input(2);
    for (auto& v : input) v = rng::uniform(gen, -1.0, 1.0);
    std::vector<double> upstream(static_cast<std::size_t>(layer.device.num_modes));
    for (auto& u : upstream) u = rng::uniform(gen, -1.0, 1.0);

    const auto coarse = layer.grad_angles(input, upstream, 1e-3);
    const auto fine = layer.grad_angles(input, upstream, 1e-5);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
      worst_consistency = std::max(worst_consistency, std::abs(coarse[k] - fine[k]));
    }

    const std::vector<double> ones(static_cast<std::size_t>(layer.device.num_modes), 1.0);
    for (double g : layer.grad_angles(input, ones, 1e-3)) {
      worst_conservation = std::max(worst_conservation, std::abs(g));
    }
  }
  out << "100 configs; worst two-step-size gap " << worst_consistency
      << " (need < 1e-4), worst conservation gradient " << worst_conservation
      << " (need < 1e-10)";
  return worst_consistency < 1e-4 && worst_conservation < 1e-10;
}

// ---------------------------------------------------------------------------
// 10. QNAS upward trend on Iris.

bool criterion_qnas(std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto dataset = hybrid::load_csv_dataset(IRIS_CSV_PATH);

  int trend_hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    client::LocalSamplerPool pool(fock::DeviceLimits{8, 4, 10'000'000, {}}, 2);
    hybrid::QnasConfig config;
    config.generations = 15;
    config.population_per_qpu = 5;
    config.train_epochs = 200;
    config.seed = seed;
    const auto split = hybrid::stratified_split(dataset, 0.7, seed);
    const auto result = hybrid::qnas_run(pool, split, config);
    if (result.history.size() == 15 &&
        result.best_fitness >= result.history.front().gen_mean_fitness) {
      ++trend_hits;
    }
  }
  const double elapsed = seconds_since(t0);
  out << trend_hits << "/10 runs with final best >= generation-0 mean (need >= 9), "
      << elapsed << " s (need < 600)";
  return trend_hits >= 9 && elapsed < 600.0;
}

// ---------------------------------------------------------------------------
// 11. End-to-end Fig 4 flow: scheduler grants 2 QPU licenses, qnas runs to
//     done, licenses release, history complete.

bool criterion_end_to_end(std::ostream& out) {
  qpu::DeviceConfig device_config;
  device_config.base_latency_ms = 0;
  device_config.per_shot_latency_ms = 0;
  cli::SelfHostedQpus qpus(2, device_config);

  const std::string out_dir = "acceptance_out";
  std::filesystem::create_directories(out_dir);

  sched::SchedulerConfig cluster_config;
  cluster_config.cpus = 8;
  cluster_config.gpus = 2;
  cluster_config.qpu_endpoints = qpus.urls();
  sched::WorkloadRegistry registry;
  hybrid::WorkloadEnv env;
  env.dataset_path = IRIS_CSV_PATH;
  env.output_dir = out_dir;
  hybrid::register_builtin_workloads(registry, env);
  sched::Cluster cluster(cluster_config, std::move(registry));

  sched::SchedHttpServer server(cluster);
  if (server.start(0) <= 0) {
    out << "failed to bind scheduler service";
    return false;
  }

  httplib::Client http(server.base_url());
  auto held_licenses = [&] {
    const auto res = http.Get("/v1/cluster/status");
    if (!res || res->status != 200) return -1;
    int held = 0;
    for (const auto& qpu : json::parse(res->body).at("pool").at("qpus")) {
      if (qpu.at("state") == "held") ++held;
    }
    return held;
  };

  const int before = held_licenses();

  // Submit through the same helper the CLI uses, with --wait semantics.
  const int generations = 5;
  cli::SubmitRequest request;
  request.scheduler_url = server.base_url();
  request.owner = "alice";
  request.cpus = 2;
  request.gpus = 1;
  request.qpus = 2;
  request.workload = "qnas";
  request.params = json{{"generations", generations}, {"population_per_qpu", 5},
                        {"epochs", 100},             {"shots", 600},
                        {"seed", 3},                 {"output", "fig4_qnas.jsonl"}};

  std::ostringstream wait_log;
  int during = -1;
  std::thread watcher([&] {
    for (int attempt = 0; attempt < 2000; ++attempt) {
      const int held = held_licenses();
      if (held == 2) {
        during = held;
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
  });
  const auto outcome = cli::submit_and_wait(request, wait_log, 20.0);
  watcher.join();
  const int after = held_licenses();
  server.stop();

  std::size_t history_lines = 0;
  std::ifstream history(out_dir + "/fig4_qnas.jsonl");
  for (std::string line; std::getline(history, line);) {
    if (!line.empty()) ++history_lines;
  }

  const bool pass = outcome.exit_code == 0 && before == 0 && during == 2 &&
                    after == 0 &&
                    outcome.record.value("state", std::string()) == "done" &&
                    history_lines == static_cast<std::size_t>(generations);
  out << "licenses held before/during/after = " << before << "/" << during << "/"
      << after << ", exit " << outcome.exit_code << ", history lines "
      << history_lines << "/" << generations;
  return pass;
}

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "physics oracle: Ryser vs permutation sum", criterion_permanent},
      {2, "normalization of exact distributions", criterion_normalization},
      {3, "Hong-Ou-Mandel suppression", criterion_hom},
      {4, "14-angle parameter count at the device", criterion_angle_count},
      {5, "FIFO order and resource exclusivity under stress", criterion_fifo_exclusivity},
      {6, "two-endpoint wall-clock speedup", criterion_speedup},
      {7, "fixed-budget variance reduction", criterion_variance},
      {8, "BBS reaches brute-force optima and beats greedy", criterion_bbs},
      {9, "PTLayer finite-difference gradients", criterion_ptlayer},
      {10, "QNAS upward fitness trend on iris", criterion_qnas},
      {11, "end-to-end scheduler flow with license accounting", criterion_end_to_end},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--list") {
      for (const auto& criterion : criteria) {
        std::cout << criterion.id << ": " << criterion.name << "\n";
      }
      return 0;
    }
    if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << criterion.id << ". "
              << criterion.name << " — " << detail.str() << " ["
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                     .count()
              << " s]\n"
              << std::flush;
    if (!pass) ++failures;
  }
  return failures;
}
