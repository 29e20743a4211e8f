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

#include "photonq/client/client.hpp"
#include "photonq/hybrid/qnas.hpp"

using namespace photonq;

#ifndef IRIS_CSV_PATH
#define IRIS_CSV_PATH "data/iris.csv"
#endif

namespace {

hybrid::TrainValSplit iris_split() {
  static const hybrid::TrainValSplit split =
      hybrid::stratified_split(hybrid::load_csv_dataset(IRIS_CSV_PATH), 0.7, 42);
  return split;
}

hybrid::QnasConfig tiny_config() {
  hybrid::QnasConfig config;
  config.generations = 4;
  config.population_per_qpu = 3;
  config.shots = 600;
  config.train_epochs = 40;
  config.seed = 13;
  return config;
}

// Pool wrapper that makes one endpoint permanently fail.
class FlakyPool : public client::SamplerPool {
 public:
  FlakyPool(client::SamplerPool& inner, std::size_t broken)
      : inner_(inner), broken_(broken) {}

  std::size_t endpoint_count() const override { return inner_.endpoint_count(); }
  std::string endpoint_name(std::size_t index) const override {
    return inner_.endpoint_name(index);
  }
  client::SampleResult sample_on(std::size_t index, const fock::CircuitSpec& spec,
                                 std::uint64_t seed) override {
    if (index == broken_) {
      throw client::ClientError(client::ErrorKind::transport, "endpoint wedged",
                                endpoint_name(index));
    }
    return inner_.sample_on(index, spec, seed);
  }
  client::SampleResult sample_split(const fock::CircuitSpec& spec,
                                    std::uint64_t base_seed) override {
    return inner_.sample_split(spec, base_seed);
  }

 private:
  client::SamplerPool& inner_;
  std::size_t broken_;
};

}  // namespace

TEST_CASE("qnas runs two endpoints and reports an upward-consistent history") {
  client::LocalSamplerPool pool(fock::DeviceLimits{8, 4, 10'000'000, {}}, 2);
  const auto split = iris_split();
  const auto config = tiny_config();

  const auto result = hybrid::qnas_run(pool, split, config);
  REQUIRE(result.history.size() == 4);
  CHECK(result.best_fitness >= result.history.front().gen_mean_fitness);
  CHECK(result.best_fitness == result.history.back().overall_best_fitness);
  // elitist best never decreases
  double previous = -1.0;
  for (const auto& stat : result.history) {
    REQUIRE(stat.overall_best_fitness >= previous);
    previous = stat.overall_best_fitness;
    CHECK(stat.gen_best_fitness <= stat.overall_best_fitness + 1e-12);
  }
  CHECK(result.best_bits.size() == 9);

  // deterministic under identical config
  const auto again = hybrid::qnas_run(pool, split, config);
  REQUIRE(again.history.size() == result.history.size());
  for (std::size_t i = 0; i < again.history.size(); ++i) {
    REQUIRE(again.history[i].gen_best_fitness ==
            result.history[i].gen_best_fitness);
    REQUIRE(again.history[i].gen_mean_fitness ==
            result.history[i].gen_mean_fitness);
  }
}

TEST_CASE("qnas degenerate single-endpoint pool works") {
  client::LocalSamplerPool pool(fock::DeviceLimits{8, 4, 10'000'000, {}}, 1);
  auto config = tiny_config();
  config.generations = 2;
  const auto result = hybrid::qnas_run(pool, iris_split(), config);
  REQUIRE(result.history.size() == 2);
  CHECK(result.best_fitness > 0.0);
}

TEST_CASE("qnas degrades to survivors when an endpoint fails") {
  client::LocalSamplerPool inner(fock::DeviceLimits{8, 4, 10'000'000, {}}, 2);
  FlakyPool pool(inner, 1);
  auto config = tiny_config();
  config.generations = 3;
  const auto result = hybrid::qnas_run(pool, iris_split(), config);
  REQUIRE(result.history.size() == 3);   // full history despite the failure
  CHECK(result.best_fitness > 0.0);
}

TEST_CASE("qnas fails only when every endpoint fails") {
  client::LocalSamplerPool inner(fock::DeviceLimits{8, 4, 10'000'000, {}}, 1);
  FlakyPool pool(inner, 0);
  auto config = tiny_config();
  config.generations = 1;
  CHECK_THROWS_AS(hybrid::qnas_run(pool, iris_split(), config), std::runtime_error);
}
