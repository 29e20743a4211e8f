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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace photonq::cli {

// Exit codes shared across the CLI; stable for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitStartup = 2;
inline constexpr int kExitWorkloadFailed = 3;
inline constexpr int kExitUnsatisfiable = 4;
inline constexpr int kExitAcceptanceMiss = 5;

struct DemoOptions {
  std::vector<std::string> endpoints;  // external devices; empty => need self_contained
  bool self_contained = false;
  bool json_output = false;
  std::uint64_t seed = 7;
  std::string out_dir = ".";

  // bbs
  std::string graph = "k3";
  int iterations = 200;
  std::optional<double> expect_cut;  // defaulted for named graphs

  // qnas
  int generations = 15;
  int population_per_qpu = 5;
  int train_epochs = 200;
  std::string dataset_path = "data/iris.csv";

  // self-contained device latency; speedup overrides to the Fig-5 numbers
  double base_latency_ms = 0.0;
  double per_shot_latency_ms = 0.0;
};

// Runs the named seeded experiment (hom | speedup | bbs | qnas), writes a
// JSON-lines log plus a summary JSON into out_dir, and prints the summary
// (one JSON document in json mode). Returns kExitOk when the experiment's
// acceptance check passes, kExitAcceptanceMiss with measured-vs-expected on
// stderr when it does not.
int run_demo(const std::string& name, const DemoOptions& options, std::ostream& out,
             std::ostream& err);

}  // namespace photonq::cli
