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

#include "photonq/fock/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "photonq/fock/permanent.hpp"
#include "photonq/util/rng.hpp"

namespace photonq::fock {

namespace {

double factorial(int n) {
  double result = 1.0;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

double occupation_factorial_product(const FockState& state) {
  double product = 1.0;
  for (int occupation : state) product *= factorial(occupation);
  return product;
}

void enumerate_recursive(int modes_left, int total_left, FockState& prefix,
                         std::vector<FockState>& out) {
  if (modes_left == 1) {
    prefix.push_back(total_left);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = 0; k <= total_left; ++k) {
    prefix.push_back(k);
    enumerate_recursive(modes_left - 1, total_left - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

double OutcomeDistribution::probability_of(const FockState& outcome) const {
  const auto it = std::lower_bound(outcomes.begin(), outcomes.end(), outcome);
  if (it == outcomes.end() || *it != outcome) return 0.0;
  return probabilities[static_cast<std::size_t>(it - outcomes.begin())];
}

std::vector<FockState> enumerate_outcomes(int num_modes, int total) {
  std::vector<FockState> out;
  FockState prefix;
  prefix.reserve(static_cast<std::size_t>(num_modes));
  enumerate_recursive(num_modes, total, prefix, out);
  return out;
}

OutcomeDistribution exact_distribution(const CircuitSpec& spec,
                                       const EnumerationGuard& guard) {
  validate_structure(spec);
  const int photons = total_photons(spec.input_state);
  if (photons > guard.max_photons || spec.num_modes > guard.max_modes) {
    throw CapacityError(
        "exact enumeration limited to " + std::to_string(guard.max_photons) +
        " photons in " + std::to_string(guard.max_modes) +
        " modes; use sampled estimation for larger circuits");
  }

  OutcomeDistribution dist;
  dist.outcomes = enumerate_outcomes(spec.num_modes, photons);
  dist.probabilities.resize(dist.outcomes.size(), 0.0);
  if (photons == 0) {
    dist.probabilities[0] = 1.0;
    return dist;
  }

  const Eigen::MatrixXcd u = build_unitary(spec);
  const int m = spec.num_modes;

  // Column j of U repeated s_j times: shared by every outcome.
  Eigen::MatrixXcd columns(m, photons);
  int col = 0;
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < spec.input_state[static_cast<std::size_t>(j)]; ++r) {
      columns.col(col++) = u.col(j);
    }
  }

  const double input_factorials = occupation_factorial_product(spec.input_state);
  Eigen::MatrixXcd submatrix(photons, photons);
  for (std::size_t idx = 0; idx < dist.outcomes.size(); ++idx) {
    const FockState& outcome = dist.outcomes[idx];
    int row = 0;
    for (int i = 0; i < m; ++i) {
      for (int r = 0; r < outcome[static_cast<std::size_t>(i)]; ++r) {
        submatrix.row(row++) = columns.row(i);
      }
    }
    const std::complex<double> perm = permanent(submatrix);
    dist.probabilities[idx] =
        std::norm(perm) / (input_factorials * occupation_factorial_product(outcome));
  }
  return dist;
}

std::vector<double> mean_photon_numbers(const OutcomeDistribution& dist) {
  if (dist.outcomes.empty()) return {};
  std::vector<double> means(dist.outcomes.front().size(), 0.0);
  for (std::size_t idx = 0; idx < dist.outcomes.size(); ++idx) {
    const double p = dist.probabilities[idx];
    if (p == 0.0) continue;
    const FockState& outcome = dist.outcomes[idx];
    for (std::size_t i = 0; i < means.size(); ++i) {
      means[i] += p * outcome[i];
    }
  }
  return means;
}

Histogram sample(const CircuitSpec& spec, std::uint64_t seed,
                 const EnumerationGuard& guard) {
  const OutcomeDistribution dist = exact_distribution(spec, guard);

  std::vector<double> cdf(dist.probabilities.size());
  double running = 0.0;
  for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
    running += dist.probabilities[i];
    cdf[i] = running;
  }

  std::mt19937_64 gen(seed);
  Histogram histogram;
  for (std::int64_t shot = 0; shot < spec.n_samples; ++shot) {
    const double u = rng::uniform01(gen) * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;  // guards the u == running edge
    histogram[dist.outcomes[static_cast<std::size_t>(it - cdf.begin())]] += 1;
  }
  return histogram;
}

}  // namespace photonq::fock
