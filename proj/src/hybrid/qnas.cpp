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

#include "photonq/hybrid/qnas.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>

#include "photonq/hybrid/mlp.hpp"
#include "photonq/hybrid/qubo.hpp"
#include "photonq/util/jsonl.hpp"
#include "photonq/util/rng.hpp"

namespace photonq::hybrid {

namespace {

constexpr std::size_t kGenomeBits = 9;

std::uint64_t bits_key(const std::vector<int>& bits) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) key |= 1ULL << i;
  }
  return key;
}

// population_per_qpu most frequent outcomes; count descending, outcome
// lexicographic on ties, so selection is deterministic.
std::vector<std::vector<int>> top_genomes(const fock::Histogram& histogram,
                                          int population) {
  std::vector<std::pair<std::int64_t, fock::FockState>> ranked;
  ranked.reserve(histogram.size());
  for (const auto& [outcome, count] : histogram) ranked.push_back({count, outcome});
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::vector<int>> genomes;
  for (const auto& [count, outcome] : ranked) {
    if (static_cast<int>(genomes.size()) >= population) break;
    genomes.push_back(outcome_to_bits(outcome, kGenomeBits));
  }
  return genomes;
}

}  // namespace

QnasResult qnas_run(client::SamplerPool& pool, const TrainValSplit& data,
                    const QnasConfig& config) {
  const std::size_t endpoints = pool.endpoint_count();
  if (endpoints == 0) throw std::invalid_argument("qnas_run needs >= 1 endpoint");

  const std::size_t angle_count = config.device.angle_count();
  std::vector<std::vector<double>> angles(endpoints);
  for (std::size_t e = 0; e < endpoints; ++e) {
    std::mt19937_64 gen(rng::mix(config.seed, 0xa116e5ULL + e));
    angles[e].resize(angle_count);
    for (auto& a : angles[e]) a = rng::uniform(gen, 0.0, 2.0 * std::numbers::pi);
  }

  // Fitness is deterministic per (genome, generation); memoized so the SPSA
  // probes and recurring genomes skip retraining.
  std::mutex cache_mutex;
  std::map<std::pair<std::uint64_t, int>, double> fitness_cache;
  auto fitness_of = [&](const std::vector<int>& bits, int generation) {
    const auto key = std::make_pair(bits_key(bits), generation);
    {
      std::lock_guard lock(cache_mutex);
      const auto it = fitness_cache.find(key);
      if (it != fitness_cache.end()) return it->second;
    }
    const std::uint64_t train_seed = rng::mix(
        config.seed, rng::mix(static_cast<std::uint64_t>(generation), key.first));
    const Architecture arch = decode_genome(bits);
    const double fitness =
        train_mlp(arch, data, config.train_epochs, train_seed).val_accuracy;
    std::lock_guard lock(cache_mutex);
    fitness_cache[key] = fitness;
    return fitness;
  };

  struct EndpointGenResult {
    bool ok = false;
    std::vector<std::pair<std::vector<int>, double>> population;  // genome, fitness
    std::vector<double> new_angles;
    std::string error;
  };

  auto evolve_endpoint = [&](std::size_t endpoint, int generation) {
    EndpointGenResult result;
    try {
      std::vector<double>& theta = angles[endpoint];
      auto evaluate = [&](const std::vector<double>& probe_angles,
                          std::uint64_t seed) {
        const auto sampled =
            pool.sample_on(endpoint, config.device.circuit(probe_angles, config.shots),
                           seed);
        const auto genomes = top_genomes(sampled.histogram, config.population_per_qpu);
        std::vector<std::pair<std::vector<int>, double>> population;
        double mean = 0.0;
        for (const auto& bits : genomes) {
          const double fitness = fitness_of(bits, generation);
          population.push_back({bits, fitness});
          mean += fitness;
        }
        if (!population.empty()) mean /= static_cast<double>(population.size());
        return std::make_pair(population, mean);
      };

      const std::uint64_t gen_seed = rng::mix(
          config.seed, 7919ULL * static_cast<std::uint64_t>(generation) + endpoint);
      auto [population, mean] = evaluate(theta, rng::mix(gen_seed, 0));

      std::mt19937_64 delta_gen(rng::mix(gen_seed, 0xde17aULL));
      const auto delta = rademacher(theta.size(), delta_gen);
      const double c_k = config.spsa.perturbation(generation);
      const auto plus =
          evaluate(perturbed(theta, delta, c_k, +1.0), rng::mix(gen_seed, 1));
      const auto minus =
          evaluate(perturbed(theta, delta, c_k, -1.0), rng::mix(gen_seed, 2));

      // Ascend mean fitness (negative step descends the negated objective).
      result.new_angles = theta;
      spsa_update(result.new_angles, delta, plus.second, minus.second,
                  -config.spsa.step_size(generation), c_k);

      result.population = std::move(population);
      for (const auto& extra : {plus.first, minus.first}) {
        for (const auto& entry : extra) result.population.push_back(entry);
      }
      result.ok = true;
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    return result;
  };

  util::JsonlWriter log(config.log_path);
  QnasResult out;
  out.best_fitness = -1.0;
  const auto t0 = std::chrono::steady_clock::now();

  for (int generation = 0; generation < config.generations; ++generation) {
    std::vector<std::future<EndpointGenResult>> futures;
    for (std::size_t e = 0; e < endpoints; ++e) {
      futures.push_back(std::async(std::launch::async, evolve_endpoint, e, generation));
    }

    double gen_best = -1.0;
    double gen_mean = 0.0;
    int evaluated = 0;
    int failures = 0;
    for (std::size_t e = 0; e < endpoints; ++e) {
      EndpointGenResult result = futures[e].get();
      if (!result.ok) {
        ++failures;
        std::cerr << "[qnas] endpoint " << pool.endpoint_name(e)
                  << " failed in generation " << generation << ": " << result.error
                  << "\n";
        continue;
      }
      angles[e] = std::move(result.new_angles);
      for (const auto& [bits, fitness] : result.population) {
        gen_best = std::max(gen_best, fitness);
        gen_mean += fitness;
        ++evaluated;
        if (fitness > out.best_fitness) {
          out.best_fitness = fitness;
          out.best_bits = bits;
          out.best_architecture = decode_genome(bits);
        }
      }
    }
    if (failures == static_cast<int>(endpoints)) {
      throw std::runtime_error("qnas: every endpoint failed in generation " +
                               std::to_string(generation));
    }
    if (evaluated > 0) gen_mean /= static_cast<double>(evaluated);

    GenerationStat stat;
    stat.generation = generation;
    stat.gen_best_fitness = std::max(gen_best, 0.0);
    stat.gen_mean_fitness = gen_mean;
    stat.overall_best_fitness = out.best_fitness;
    stat.wall_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.history.push_back(stat);
    log.write({{"generation", stat.generation},
               {"best_fitness", stat.gen_best_fitness},
               {"mean_fitness", stat.gen_mean_fitness},
               {"overall_best_fitness", stat.overall_best_fitness},
               {"best_architecture", out.best_architecture.describe()},
               {"wall_time_s", stat.wall_s}});
  }
  return out;
}

}  // namespace photonq::hybrid
