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
#include <stdexcept>
#include <vector>

#include "photonq/fock/circuit.hpp"
#include "photonq/fock/fock_state.hpp"

namespace photonq::fock {

// Exact output distribution over photon-number outcomes, stored in
// lexicographic outcome order so the inverse-CDF sampler is reproducible
// bit for bit.
struct OutcomeDistribution {
  std::vector<FockState> outcomes;
  std::vector<double> probabilities;

  std::size_t size() const { return outcomes.size(); }
  // 0 for outcomes outside the support (wrong photon number).
  double probability_of(const FockState& outcome) const;
};

// Enumeration ceiling for exact mode. The defaults keep the outcome space
// C(n+M-1, n) under ~12k entries and cover the full device envelope of
// 4 photons in 8 qumodes with headroom.
struct EnumerationGuard {
  int max_photons = 6;
  int max_modes = 12;
};

// Raised when a spec falls outside the exact-enumeration guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All occupation vectors of `num_modes` entries summing to `total`, in
// lexicographic ascending order.
std::vector<FockState> enumerate_outcomes(int num_modes, int total);

// For input s and every outcome t with the same photon total,
//   P(t) = |perm(U_{s,t})|^2 / (prod_i s_i! * prod_j t_j!)
// where U_{s,t} repeats column j of the circuit unitary s_j times and row i
// t_i times. A zero-photon input yields the vacuum outcome with
// probability 1. Throws CapacityError outside the guard.
OutcomeDistribution exact_distribution(const CircuitSpec& spec,
                                       const EnumerationGuard& guard = {});

// E[t_i] per mode; entries sum to the input photon total.
std::vector<double> mean_photon_numbers(const OutcomeDistribution& dist);

// n_samples i.i.d. draws from the exact distribution via inverse CDF over
// the lexicographic outcome list. Identical (spec, seed) pairs produce
// identical histograms.
Histogram sample(const CircuitSpec& spec, std::uint64_t seed,
                 const EnumerationGuard& guard = {});

}  // namespace photonq::fock
