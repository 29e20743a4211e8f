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
#include <string>
#include <vector>

#include "photonq/client/client.hpp"
#include "photonq/hybrid/circuits.hpp"
#include "photonq/hybrid/qubo.hpp"
#include "photonq/hybrid/spsa.hpp"

namespace photonq::hybrid {

struct BbsConfig {
  int max_iterations = 200;
  int patience = 0;  // 0 disables the no-improvement stop
  // Tile steps without a global improvement before the working context
  // re-seeds (fresh random assignment and angles); 0 keeps one context for
  // the whole run. The global best is elitist across restarts.
  int restart_after = 12;
  std::int64_t shots_per_step = 200;
  SpsaSchedule spsa{0.5, 0.2, 0.602, 0.101};
  std::uint64_t seed = 1;
  DeviceShape device;
  std::string log_path;  // per-iteration JSONL when non-empty
};

struct BbsIterationStat {
  int iteration = 0;
  double best_energy = 0.0;
  double mean_energy = 0.0;  // expected conditional energy of the step's samples
  double wall_s = 0.0;
};

struct BbsState {
  std::vector<std::vector<double>> tile_angles;
  std::vector<int> best_assignment;
  double best_energy = 0.0;
  int iterations = 0;
  std::vector<BbsIterationStat> history;
};

// Binary bosonic solver: block-coordinate descent over the tiling.
//
// Each iteration steps one tile: freeze everything outside the tile at the
// working assignment, draw shots_per_step samples from the tile's circuit,
// threshold outcomes to candidate tile bits (each sample's tile-complement
// is evaluated too, since the photon budget caps the 1-bits a sample can
// carry), keep improvements, then move the tile's angles one SPSA step on
// the expected conditional energy (two extra sampled evaluations). Tiles
// with no QUBO cross-terms between them are stepped concurrently on
// distinct endpoints. When the search stalls for restart_after steps the
// working context re-seeds; best_assignment/best_energy are elitist across
// the whole run, so best_energy is non-increasing.
//
// Stops after max_iterations, or once patience iterations pass without an
// improvement (when patience > 0).
BbsState bbs_solve(const QuboProblem& problem, const Tiling& tiling,
                   client::SamplerPool& pool, const BbsConfig& config);

}  // namespace photonq::hybrid
