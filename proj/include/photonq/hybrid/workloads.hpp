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

#include <string>

#include "photonq/client/client.hpp"
#include "photonq/sched/scheduler.hpp"

namespace photonq::hybrid {

struct WorkloadEnv {
  std::string dataset_path = "data/iris.csv";  // for qnas
  std::string output_dir = ".";                // history files land here
  client::ClientOptions client_options;
};

// Registers the batch workloads the scheduler can run:
//
//   "qnas"  params: generations, population_per_qpu, shots, epochs, seed,
//           output (file name). Needs >= 1 granted QPU endpoint.
//   "bbs"   params: graph ("k3" | "p4" | {"num_vertices", "edges"}) or
//           "qubo" ({size, entries, offset}), iterations, shots, seed,
//           tile_size, output. Needs >= 1 granted QPU endpoint.
//   "sleep" params: ms. No QPU needed; handy for drills and tests.
//
// Result payloads carry the headline number (best fitness / best energy)
// plus the history file path.
void register_builtin_workloads(sched::WorkloadRegistry& registry,
                                const WorkloadEnv& env);

}  // namespace photonq::hybrid
