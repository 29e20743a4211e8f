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

// photonq: operator and user entry points for the simulated photonic HPC
// environment. Subcommands: qpu-serve, sched-serve, submit, status, sample,
// demo. Exit codes: 0 ok, 1 config/parse, 2 bind/startup, 3 workload
// failed, 4 unsatisfiable, 5 acceptance miss.

#include "photonq/cli/config.hpp"
#include "photonq/cli/demos.hpp"
#include "photonq/cli/submit.hpp"
#include "photonq/client/client.hpp"
#include "photonq/hybrid/workloads.hpp"
#include "photonq/qpu/service.hpp"
#include "photonq/sched/service.hpp"
#include "photonq/util/wire.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace photonq;
using nlohmann::json;

std::atomic<bool> g_shutdown{false};
std::mutex g_shutdown_mutex;
std::condition_variable g_shutdown_cv;

void on_signal(int) {
  g_shutdown = true;
  g_shutdown_cv.notify_all();
}

void wait_for_shutdown() {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::unique_lock lock(g_shutdown_mutex);
  g_shutdown_cv.wait(lock, [] { return g_shutdown.load(); });
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> endpoints_from_env() {
  const char* env = std::getenv("QPU_ENDPOINTS");
  return env ? split_csv(env) : std::vector<std::string>{};
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text) {
  std::vector<T> out;
  for (const auto& token : split_csv(text)) {
    out.push_back(static_cast<T>(std::stod(token)));
  }
  return out;
}

int cmd_qpu_serve(const std::string& config_path, std::optional<int> port,
                  std::optional<std::string> host, bool json_output) {
  cli::QpuServeConfig config;
  try {
    config = cli::load_qpu_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return cli::kExitConfig;
  }
  if (port) config.port = *port;
  if (host) config.host = *host;

  qpu::QpuDevice device(config.device);
  qpu::QpuHttpServer server(device, config.host);
  if (server.start(config.port) <= 0) {
    std::cerr << "cannot bind " << config.host << ":" << config.port
              << " (port in use?)\n";
    return cli::kExitStartup;
  }
  std::cerr << "device " << config.device.device_id << " listening on "
            << server.base_url() << "\n";
  if (json_output) {
    std::cout << json{{"event", "listening"},
                      {"device_id", config.device.device_id},
                      {"url", server.base_url()}}
                     .dump()
              << "\n"
              << std::flush;
  }
  wait_for_shutdown();
  server.stop();
  return cli::kExitOk;
}

int cmd_sched_serve(const std::string& config_path, std::optional<int> port,
                    std::optional<std::string> host,
                    const std::vector<std::string>& extra_endpoints, bool json_output) {
  cli::SchedServeConfig config;
  try {
    config = cli::load_sched_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return cli::kExitConfig;
  }
  if (port) config.port = *port;
  if (host) config.host = *host;
  for (const auto& endpoint : extra_endpoints) {
    config.cluster.qpu_endpoints.push_back(endpoint);
  }
  if (config.cluster.qpu_endpoints.empty()) {
    const auto env = endpoints_from_env();
    config.cluster.qpu_endpoints.assign(env.begin(), env.end());
  }

  sched::WorkloadRegistry registry;
  hybrid::WorkloadEnv env;
  env.dataset_path = config.dataset_path;
  env.output_dir = config.output_dir;
  hybrid::register_builtin_workloads(registry, env);

  sched::Cluster cluster(config.cluster, std::move(registry));

  // Startup probe: unreachable devices are marked down with a warning; the
  // service still starts and only grants healthy endpoints.
  for (std::size_t i = 0; i < config.cluster.qpu_endpoints.size(); ++i) {
    httplib::Client probe(config.cluster.qpu_endpoints[i]);
    probe.set_connection_timeout(std::chrono::seconds(1));
    const auto res = probe.Get("/v1/admin/status");
    if (!res || res->status != 200) {
      std::cerr << "warning: QPU endpoint " << config.cluster.qpu_endpoints[i]
                << " unreachable, marked down\n";
      cluster.set_endpoint_health(i, false);
    }
  }

  sched::SchedHttpServer server(cluster, config.host);
  if (server.start(config.port) <= 0) {
    std::cerr << "cannot bind " << config.host << ":" << config.port
              << " (port in use?)\n";
    return cli::kExitStartup;
  }
  std::cerr << "scheduler listening on " << server.base_url() << " with "
            << config.cluster.qpu_endpoints.size() << " QPU endpoint(s)\n";
  if (json_output) {
    std::cout << json{{"event", "listening"}, {"url", server.base_url()}}.dump() << "\n"
              << std::flush;
  }
  wait_for_shutdown();
  server.stop();
  return cli::kExitOk;
}

int cmd_submit(const cli::SubmitRequest& request, bool wait, bool json_output) {
  const auto outcome = wait ? cli::submit_and_wait(request, std::cerr)
                            : cli::submit_batch(request, std::cerr);
  if (outcome.exit_code == cli::kExitOk || outcome.exit_code == cli::kExitWorkloadFailed) {
    if (json_output) {
      std::cout << (outcome.record.is_null() || outcome.record.empty()
                        ? json{{"job_id", outcome.job_id}}
                        : outcome.record)
                       .dump()
                << "\n";
    } else if (!wait) {
      std::cout << outcome.job_id << "\n";
    } else {
      std::cout << outcome.job_id << " "
                << outcome.record.value("state", std::string("unknown")) << "\n";
    }
  }
  return outcome.exit_code;
}

int cmd_status(const std::string& scheduler_url, bool json_output) {
  httplib::Client http(scheduler_url);
  http.set_connection_timeout(std::chrono::seconds(2));
  const auto res = http.Get("/v1/cluster/status");
  if (!res || res->status != 200) {
    std::cerr << "scheduler unreachable at " << scheduler_url << "\n";
    return cli::kExitStartup;
  }
  const json status = json::parse(res->body);
  if (json_output) {
    std::cout << status.dump() << "\n";
    return cli::kExitOk;
  }
  const auto& pool = status.at("pool");
  std::cout << "cpus " << pool.at("cpus_free") << "/" << pool.at("cpus_total")
            << " free, gpus " << pool.at("gpus_free") << "/" << pool.at("gpus_total")
            << " free\n";
  for (const auto& qpu : pool.at("qpus")) {
    std::cout << "qpu " << qpu.at("endpoint").get<std::string>() << ": "
              << qpu.at("state").get<std::string>();
    if (qpu.contains("holder")) std::cout << " by " << qpu.at("holder").get<std::string>();
    std::cout << "\n";
  }
  std::cout << "pending " << status.at("pending").size() << ", running "
            << status.at("running").size() << ", completed "
            << status.at("jobs_completed") << "\n";
  return cli::kExitOk;
}

int cmd_sample(std::vector<std::string> endpoints, const std::string& input,
               const std::string& loops, const std::string& angles, std::int64_t shots,
               std::uint64_t seed, const std::string& split, bool json_output) {
  if (endpoints.empty()) endpoints = endpoints_from_env();
  if (endpoints.empty()) {
    std::cerr << "no endpoints: pass --endpoints or set QPU_ENDPOINTS\n";
    return cli::kExitConfig;
  }
  fock::CircuitSpec spec;
  try {
    spec.input_state = parse_numbers<int>(input);
    spec.loop_lengths = parse_numbers<int>(loops);
    spec.bs_angles = parse_numbers<double>(angles);
    spec.num_modes = static_cast<int>(spec.input_state.size());
    spec.n_samples = shots;
    fock::validate_structure(spec);
  } catch (const std::exception& e) {
    std::cerr << "bad circuit: " << e.what() << "\n";
    return cli::kExitConfig;
  }

  try {
    client::QpuClient pool(endpoints);
    const auto policy = split == "all_to_one" ? client::SplitPolicy::all_to_one()
                                              : client::SplitPolicy::equal();
    const auto result = pool.sample_multi(spec, seed, policy);
    json per_endpoint = json::object();
    for (const auto& [endpoint, count] : result.per_endpoint_shots) {
      per_endpoint[endpoint] = count;
    }
    const json doc{{"histogram", wire::histogram_to_json(result.histogram)},
                   {"total_shots", result.total_shots},
                   {"per_endpoint_shots", per_endpoint},
                   {"wall_time_s", result.wall_time_s}};
    if (json_output) {
      std::cout << doc.dump() << "\n";
    } else {
      for (const auto& [outcome, count] : result.histogram) {
        std::cout << fock::format_state(outcome) << " " << count << "\n";
      }
      std::cerr << result.total_shots << " shots over "
                << result.per_endpoint_shots.size() << " endpoint(s) in "
                << result.wall_time_s << " s\n";
    }
    return cli::kExitOk;
  } catch (const client::ClientError& e) {
    std::cerr << "sampling failed: " << e.what() << "\n";
    switch (e.kind()) {
      case client::ErrorKind::device_rejected: return cli::kExitConfig;
      case client::ErrorKind::transport:
      case client::ErrorKind::no_capacity: return cli::kExitStartup;
      default: return cli::kExitWorkloadFailed;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photonq: simulated multi-QPU photonic computing environment"};
  app.require_subcommand(1);
  bool json_output = false;
  app.add_flag("--json", json_output, "machine-readable output on stdout");

  // qpu-serve
  auto* qpu_serve = app.add_subcommand("qpu-serve", "run one photonic device service");
  std::string qpu_config_path;
  std::optional<int> qpu_port;
  std::optional<std::string> qpu_host;
  qpu_serve->add_option("--config", qpu_config_path, "JSON config file");
  qpu_serve->add_option("--port", qpu_port, "listen port (0 = ephemeral)");
  qpu_serve->add_option("--host", qpu_host, "bind address");

  // sched-serve
  auto* sched_serve = app.add_subcommand("sched-serve", "run the workload manager");
  std::string sched_config_path;
  std::optional<int> sched_port;
  std::optional<std::string> sched_host;
  std::vector<std::string> sched_endpoints;
  sched_serve->add_option("--config", sched_config_path, "JSON config file");
  sched_serve->add_option("--port", sched_port, "listen port (0 = ephemeral)");
  sched_serve->add_option("--host", sched_host, "bind address");
  sched_serve->add_option("--qpu", sched_endpoints, "QPU endpoint URL (repeatable)");

  // submit
  auto* submit = app.add_subcommand("submit", "submit a batch job to the scheduler");
  cli::SubmitRequest request;
  std::string params_json = "{}";
  bool wait = false;
  submit->add_option("--scheduler", request.scheduler_url, "scheduler base URL");
  submit->add_option("--owner", request.owner, "submitting user");
  submit->add_option("--cpus", request.cpus, "CPU slots");
  submit->add_option("--gpus", request.gpus, "GPU slots");
  submit->add_option("--qpus", request.qpus, "QPU licenses");
  submit->add_option("--workload", request.workload, "workload name")->required();
  submit->add_option("--params", params_json, "workload parameters (JSON)");
  submit->add_flag("--wait", wait, "follow the job to completion");

  // status
  auto* status = app.add_subcommand("status", "show cluster status");
  std::string status_url = "http://127.0.0.1:8080";
  status->add_option("--scheduler", status_url, "scheduler base URL");

  // sample
  auto* sample = app.add_subcommand("sample", "run one circuit against QPU endpoints");
  std::vector<std::string> sample_endpoints;
  std::string sample_input = "1,0,1,0,1,0,1,0";
  std::string sample_loops = "1,1";
  std::string sample_angles;
  std::int64_t sample_shots = 10000;
  std::uint64_t sample_seed = 42;
  std::string sample_split = "equal";
  sample->add_option("--endpoints", sample_endpoints,
                     "device URLs (also QPU_ENDPOINTS env, comma-separated)");
  sample->add_option("--input", sample_input, "input occupations, comma-separated");
  sample->add_option("--loops", sample_loops, "loop lengths, comma-separated");
  sample->add_option("--angles", sample_angles, "beam-splitter angles, comma-separated");
  sample->add_option("--shots", sample_shots, "number of samples");
  sample->add_option("--seed", sample_seed, "base seed");
  sample->add_option("--split", sample_split, "equal | all_to_one");

  // demo
  auto* demo = app.add_subcommand("demo", "run a built-in experiment");
  std::string demo_name;
  cli::DemoOptions demo_options;
  demo->add_option("name", demo_name, "hom | speedup | bbs | qnas")->required();
  demo->add_option("--endpoints", demo_options.endpoints,
                   "device URLs (also QPU_ENDPOINTS env)");
  demo->add_flag("--self-contained", demo_options.self_contained,
                 "spin up in-process devices");
  demo->add_option("--seed", demo_options.seed, "experiment seed");
  demo->add_option("--out", demo_options.out_dir, "output directory for logs");
  demo->add_option("--graph", demo_options.graph, "bbs: k3 | p4 | edge-list JSON file");
  demo->add_option("--iterations", demo_options.iterations, "bbs: iteration budget");
  demo->add_option("--expect-cut", demo_options.expect_cut,
                   "bbs: acceptance threshold for the cut");
  demo->add_option("--generations", demo_options.generations, "qnas: generations");
  demo->add_option("--population", demo_options.population_per_qpu,
                   "qnas: genomes per QPU");
  demo->add_option("--epochs", demo_options.train_epochs, "qnas: training epochs");
  demo->add_option("--data", demo_options.dataset_path, "qnas: dataset CSV path");
  demo->add_option("--base-latency-ms", demo_options.base_latency_ms,
                   "self-contained device base latency");
  demo->add_option("--per-shot-latency-ms", demo_options.per_shot_latency_ms,
                   "self-contained device per-shot latency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // 0, --help has no side effects
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfig;
  }

  try {
    if (qpu_serve->parsed()) {
      return cmd_qpu_serve(qpu_config_path, qpu_port, qpu_host, json_output);
    }
    if (sched_serve->parsed()) {
      return cmd_sched_serve(sched_config_path, sched_port, sched_host, sched_endpoints,
                             json_output);
    }
    if (submit->parsed()) {
      try {
        request.params = nlohmann::json::parse(params_json);
      } catch (const std::exception& e) {
        std::cerr << "bad --params JSON: " << e.what() << "\n";
        return cli::kExitConfig;
      }
      return cmd_submit(request, wait, json_output);
    }
    if (status->parsed()) return cmd_status(status_url, json_output);
    if (sample->parsed()) {
      return cmd_sample(sample_endpoints, sample_input, sample_loops, sample_angles,
                        sample_shots, sample_seed, sample_split, json_output);
    }
    if (demo->parsed()) {
      if (demo_options.endpoints.empty()) demo_options.endpoints = endpoints_from_env();
      demo_options.json_output = json_output;
      return cli::run_demo(demo_name, demo_options, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitConfig;
  }
  return cli::kExitConfig;
}
