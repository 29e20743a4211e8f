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

#include "photonq/hybrid/bbs.hpp"

#include <chrono>
#include <future>
#include <limits>
#include <numbers>

#include "photonq/util/jsonl.hpp"
#include "photonq/util/rng.hpp"

namespace photonq::hybrid {

namespace {

struct Candidate {
  std::vector<int> tile_bits;
  double energy = std::numeric_limits<double>::infinity();
};

struct Evaluation {
  double mean_energy = 0.0;
  Candidate best;
};

struct StepResult {
  std::size_t tile_index = 0;
  std::vector<double> new_angles;
  Candidate best;          // best candidate seen across the three evaluations
  double mean_energy = 0.0;  // from the unperturbed evaluation
};

std::vector<int> with_tile_bits(const std::vector<int>& base,
                                const std::vector<int>& tile,
                                const std::vector<int>& bits) {
  std::vector<int> assignment = base;
  for (std::size_t i = 0; i < tile.size(); ++i) {
    assignment[static_cast<std::size_t>(tile[i])] = bits[i];
  }
  return assignment;
}

}  // namespace

BbsState bbs_solve(const QuboProblem& problem, const Tiling& tiling,
                   client::SamplerPool& pool, const BbsConfig& config) {
  tiling.validate(problem.size(), config.device.num_modes);
  if (pool.endpoint_count() == 0) {
    throw std::invalid_argument("bbs_solve needs at least one endpoint");
  }

  const std::size_t tile_count = tiling.tiles.size();
  const std::size_t angle_count = config.device.angle_count();

  BbsState state;
  state.best_assignment.assign(static_cast<std::size_t>(problem.size()), 0);
  state.best_energy = problem.energy(state.best_assignment);

  // Working context: the assignment tiles are conditioned on. Starts at the
  // global best and re-seeds on stalls.
  std::vector<int> context = state.best_assignment;
  double context_energy = state.best_energy;

  state.tile_angles.resize(tile_count);
  auto reseed_angles = [&](std::uint64_t salt) {
    for (std::size_t t = 0; t < tile_count; ++t) {
      std::mt19937_64 gen(rng::mix(config.seed, rng::mix(salt, 0x5eed0000ULL + t)));
      state.tile_angles[t].assign(angle_count, 0.0);
      for (auto& angle : state.tile_angles[t]) {
        angle = rng::uniform(gen, 0.0, 2.0 * std::numbers::pi);
      }
    }
  };
  reseed_angles(0);

  // Tiles interact when any QUBO cross-term couples their variables;
  // non-interacting tiles may step concurrently against a shared snapshot.
  std::vector<std::vector<bool>> interacts(tile_count,
                                           std::vector<bool>(tile_count, false));
  for (std::size_t a = 0; a < tile_count; ++a) {
    for (std::size_t b = a + 1; b < tile_count; ++b) {
      bool coupled = false;
      for (int i : tiling.tiles[a]) {
        for (int j : tiling.tiles[b]) {
          if (problem.matrix()(i, j) != 0.0) {
            coupled = true;
            break;
          }
        }
        if (coupled) break;
      }
      interacts[a][b] = interacts[b][a] = coupled;
    }
  }

  util::JsonlWriter log(config.log_path);
  std::vector<int> spsa_steps(tile_count, 0);
  std::mt19937_64 restart_gen(rng::mix(config.seed, 0xba7c4ULL));
  const auto t0 = std::chrono::steady_clock::now();

  int iteration = 0;
  int since_improvement = 0;
  int since_restart_improvement = 0;
  int restarts = 0;
  std::size_t cursor = 0;

  auto evaluate = [&](std::size_t tile_index, const std::vector<double>& angles,
                      const std::vector<int>& frozen, std::size_t endpoint,
                      std::uint64_t seed) {
    const auto& tile = tiling.tiles[tile_index];
    const auto spec = config.device.circuit(angles, config.shots_per_step);
    const auto result = pool.sample_on(endpoint, spec, seed);

    Evaluation eval;
    double total = 0.0;
    for (const auto& [outcome, count] : result.histogram) {
      const auto bits = outcome_to_bits(outcome, tile.size());
      const double energy = problem.energy(with_tile_bits(frozen, tile, bits));
      eval.mean_energy += energy * static_cast<double>(count);
      total += static_cast<double>(count);
      if (energy < eval.best.energy) {
        eval.best = {bits, energy};
      }
      // The photon budget caps how many 1-bits a sampled pattern can carry
      // (4 photons -> at most four per tile), which walls off half the block
      // patterns. The tile-wise complement of every sample is evaluated as a
      // free extra candidate; it does not enter the SPSA objective.
      std::vector<int> flipped(bits.size());
      for (std::size_t i = 0; i < bits.size(); ++i) flipped[i] = 1 - bits[i];
      const double flipped_energy =
          problem.energy(with_tile_bits(frozen, tile, flipped));
      if (flipped_energy < eval.best.energy) {
        eval.best = {flipped, flipped_energy};
      }
    }
    if (total > 0) eval.mean_energy /= total;
    return eval;
  };

  auto step_tile = [&](std::size_t tile_index, std::size_t endpoint,
                       std::vector<int> frozen, std::uint64_t step_seed) {
    StepResult step;
    step.tile_index = tile_index;
    std::vector<double>& theta = state.tile_angles[tile_index];
    const int k = spsa_steps[static_cast<std::size_t>(tile_index)];

    const Evaluation main = evaluate(tile_index, theta, frozen, endpoint,
                                     rng::mix(step_seed, 0));
    std::mt19937_64 delta_gen(rng::mix(step_seed, 0xde17aULL));
    const auto delta = rademacher(theta.size(), delta_gen);
    const double c_k = config.spsa.perturbation(k);
    const Evaluation plus = evaluate(tile_index, perturbed(theta, delta, c_k, +1.0),
                                     frozen, endpoint, rng::mix(step_seed, 1));
    const Evaluation minus = evaluate(tile_index, perturbed(theta, delta, c_k, -1.0),
                                      frozen, endpoint, rng::mix(step_seed, 2));

    step.new_angles = theta;
    spsa_update(step.new_angles, delta, plus.mean_energy, minus.mean_energy,
                config.spsa.step_size(k), c_k);
    step.mean_energy = main.mean_energy;
    step.best = main.best;
    if (plus.best.energy < step.best.energy) step.best = plus.best;
    if (minus.best.energy < step.best.energy) step.best = minus.best;
    return step;
  };

  while (iteration < config.max_iterations) {
    // Batch: the cursor tile plus following tiles that interact with none
    // of the batch, one endpoint each.
    std::vector<std::size_t> batch{cursor};
    for (std::size_t offset = 1;
         offset < tile_count && batch.size() < pool.endpoint_count(); ++offset) {
      const std::size_t candidate = (cursor + offset) % tile_count;
      bool clean = true;
      for (std::size_t member : batch) {
        if (interacts[candidate][member]) {
          clean = false;
          break;
        }
      }
      if (clean) batch.push_back(candidate);
    }
    if (static_cast<int>(batch.size()) > config.max_iterations - iteration) {
      batch.resize(static_cast<std::size_t>(config.max_iterations - iteration));
    }

    const std::vector<int> frozen = context;
    std::vector<std::future<StepResult>> futures;
    std::vector<StepResult> results;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const std::uint64_t step_seed =
          rng::mix(config.seed, 1000003ULL * static_cast<std::uint64_t>(iteration) + i);
      const std::size_t endpoint = i % pool.endpoint_count();
      if (batch.size() == 1) {
        results.push_back(step_tile(batch[i], endpoint, frozen, step_seed));
      } else {
        futures.push_back(std::async(std::launch::async, step_tile, batch[i], endpoint,
                                     frozen, step_seed));
      }
    }
    for (auto& fut : futures) results.push_back(fut.get());

    for (const StepResult& step : results) {
      state.tile_angles[step.tile_index] = step.new_angles;
      ++spsa_steps[step.tile_index];

      bool improved = false;
      if (!step.best.tile_bits.empty()) {
        // Re-apply against the current context: concurrent batch members
        // only touch non-interacting blocks, so the move stays valid.
        const auto candidate = with_tile_bits(context, tiling.tiles[step.tile_index],
                                              step.best.tile_bits);
        const double energy = problem.energy(candidate);
        if (energy < context_energy - 1e-12) {
          context = candidate;
          context_energy = energy;
        }
        if (energy < state.best_energy - 1e-12) {
          state.best_assignment = candidate;
          state.best_energy = energy;
          improved = true;
        }
      }
      since_improvement = improved ? 0 : since_improvement + 1;
      since_restart_improvement = improved ? 0 : since_restart_improvement + 1;

      BbsIterationStat stat;
      stat.iteration = iteration;
      stat.best_energy = state.best_energy;
      stat.mean_energy = step.mean_energy;
      stat.wall_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      state.history.push_back(stat);
      log.write({{"iteration", stat.iteration},
                 {"tile", step.tile_index},
                 {"best_energy", stat.best_energy},
                 {"mean_energy", stat.mean_energy},
                 {"restarts", restarts},
                 {"wall_time_s", stat.wall_s}});
      ++iteration;
    }

    cursor = (cursor + 1) % tile_count;
    if (config.patience > 0 && since_improvement >= config.patience) break;

    if (config.restart_after > 0 &&
        since_restart_improvement >= config.restart_after) {
      ++restarts;
      for (auto& bit : context) bit = static_cast<int>(restart_gen() & 1ULL);
      context_energy = problem.energy(context);
      reseed_angles(static_cast<std::uint64_t>(restarts));
      std::fill(spsa_steps.begin(), spsa_steps.end(), 0);
      since_restart_improvement = 0;
    }
  }

  state.iterations = iteration;
  return state;
}

}  // namespace photonq::hybrid
