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

#include "photonq/hybrid/workloads.hpp"

#include <chrono>
#include <filesystem>
#include <thread>

#include "photonq/hybrid/bbs.hpp"
#include "photonq/hybrid/dataset.hpp"
#include "photonq/hybrid/qnas.hpp"
#include "photonq/hybrid/qubo.hpp"

namespace photonq::hybrid {

using nlohmann::json;

namespace {

// Absolute outputs are honored as-is; relative ones land in the service's
// output directory.
std::string resolve_output(const WorkloadEnv& env, const std::string& name) {
  std::filesystem::path path(name);
  if (!path.is_absolute()) path = std::filesystem::path(env.output_dir) / path;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  return path.string();
}

std::vector<WeightedEdge> named_graph(const std::string& name, int& num_vertices) {
  if (name == "k3") {
    num_vertices = 3;
    return {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}};
  }
  if (name == "p4") {
    num_vertices = 4;
    return {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  }
  throw std::invalid_argument("unknown graph name: " + name);
}

sched::WorkloadResult run_bbs_workload(const sched::WorkloadContext& context,
                                       const WorkloadEnv& env) {
  if (context.allocation.qpu_endpoints.empty()) {
    return {false, json{{"error", "bbs workload needs at least one QPU"}}};
  }
  const json& params = context.params;

  int num_vertices = 0;
  std::vector<WeightedEdge> edges;
  std::optional<QuboProblem> problem;
  if (params.contains("qubo")) {
    problem = QuboProblem::from_json(params.at("qubo"));
  } else {
    const json graph = params.value("graph", json("k3"));
    if (graph.is_string()) {
      edges = named_graph(graph.get<std::string>(), num_vertices);
    } else {
      edges = edges_from_json(graph, num_vertices);
    }
    problem = qubo_from_maxcut(edges, num_vertices);
  }

  BbsConfig config;
  config.max_iterations = params.value("iterations", 200);
  config.patience = params.value("patience", 0);
  config.shots_per_step = params.value("shots", 200);
  config.seed = params.value("seed", 1);
  config.device.num_modes = params.value("modes", 8);
  const std::string output = params.value("output", context.job_id + "_bbs.jsonl");
  config.log_path = resolve_output(env, output);

  const int tile_size = params.value("tile_size", config.device.num_modes);
  const Tiling tiling = Tiling::contiguous(problem->size(), tile_size);

  client::QpuClient pool(context.allocation.qpu_endpoints, env.client_options);
  const BbsState state = bbs_solve(*problem, tiling, pool, config);

  json detail{{"best_energy", state.best_energy},
              {"best_assignment", state.best_assignment},
              {"iterations", state.iterations},
              {"history_file", config.log_path}};
  if (!edges.empty()) detail["best_cut"] = cut_value(edges, state.best_assignment);
  return {true, detail};
}

sched::WorkloadResult run_qnas_workload(const sched::WorkloadContext& context,
                                        const WorkloadEnv& env) {
  if (context.allocation.qpu_endpoints.empty()) {
    return {false, json{{"error", "qnas workload needs at least one QPU"}}};
  }
  const json& params = context.params;

  QnasConfig config;
  config.generations = params.value("generations", 15);
  config.population_per_qpu = params.value("population_per_qpu", 5);
  config.shots = params.value("shots", 1000);
  config.train_epochs = params.value("epochs", 200);
  config.seed = params.value("seed", 7);
  const std::string output = params.value("output", context.job_id + "_qnas.jsonl");
  config.log_path = resolve_output(env, output);

  const Dataset dataset =
      load_csv_dataset(params.value("dataset", env.dataset_path));
  const TrainValSplit split = stratified_split(dataset, 0.7, config.seed);

  client::QpuClient pool(context.allocation.qpu_endpoints, env.client_options);
  const QnasResult result = qnas_run(pool, split, config);

  return {true, json{{"best_fitness", result.best_fitness},
                     {"best_architecture", result.best_architecture.describe()},
                     {"generations", result.history.size()},
                     {"history_file", config.log_path}}};
}

}  // namespace

void register_builtin_workloads(sched::WorkloadRegistry& registry,
                                const WorkloadEnv& env) {
  registry.add("bbs", [env](const sched::WorkloadContext& context) {
    return run_bbs_workload(context, env);
  });
  registry.add("qnas", [env](const sched::WorkloadContext& context) {
    return run_qnas_workload(context, env);
  });
  registry.add("sleep", [](const sched::WorkloadContext& context) {
    const int ms = context.params.value("ms", 10);
    std::this_thread::sleep_for(std::chrono::milliseconds(ms));
    return sched::WorkloadResult{true, json{{"slept_ms", ms}}};
  });
}

}  // namespace photonq::hybrid
