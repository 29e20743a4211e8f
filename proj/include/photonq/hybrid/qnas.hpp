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
#include "photonq/hybrid/dataset.hpp"
#include "photonq/hybrid/genome.hpp"
#include "photonq/hybrid/spsa.hpp"

namespace photonq::hybrid {

struct QnasConfig {
  int generations = 15;
  int population_per_qpu = 5;
  std::int64_t shots = 1000;
  int train_epochs = 200;
  std::uint64_t seed = 7;
  SpsaSchedule spsa{0.25, 0.15, 0.602, 0.101};
  DeviceShape device;
  std::string log_path;
};

struct GenerationStat {
  int generation = 0;
  double gen_best_fitness = 0.0;   // best genome evaluated this generation
  double gen_mean_fitness = 0.0;   // mean over this generation's populations
  double overall_best_fitness = 0.0;  // elitist best so far
  double wall_s = 0.0;
};

struct QnasResult {
  std::vector<GenerationStat> history;  // one entry per generation
  std::vector<int> best_bits;
  Architecture best_architecture;
  double best_fitness = 0.0;
};

// Evolutionary architecture search driven by circuit samples.
//
// Each endpoint evolves an independent sub-population: per generation it
// samples its circuit, keeps the population_per_qpu most frequent outcomes,
// thresholds them to 9-bit genomes (presence bits of the first nine modes,
// missing modes read as 0), decodes and trains each candidate, then moves
// its angles one SPSA step toward higher mean fitness (two extra sampled
// evaluations). Sub-populations run concurrently and synchronize at
// generation boundaries; elitism keeps the best genome found anywhere.
// Training fitness is deterministic per (genome, generation, seed).
//
// A failing endpoint degrades the run to the survivors with a warning on
// stderr; the run only fails when every endpoint fails in a generation.
QnasResult qnas_run(client::SamplerPool& pool, const TrainValSplit& data,
                    const QnasConfig& config);

}  // namespace photonq::hybrid
