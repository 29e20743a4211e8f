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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "photonq/fock/fock_state.hpp"

namespace photonq::fock {

// One unit of QPU work: a loop-based interferometer configuration plus the
// input state and shot count.
//
// The device is a train of M time-bin qumodes passed through fiber delay
// loops. A loop of length L couples bins (i, i+L) for i = 0..M-L-1 with one
// programmable beam splitter each, so it contributes M-L angles. Angles are
// consumed loop by loop, ascending i within a loop.
struct CircuitSpec {
  int num_modes = 0;
  std::vector<int> loop_lengths;
  std::vector<double> bs_angles;
  FockState input_state;
  std::int64_t n_samples = 1;
};

// Total beam splitters for a loop configuration: sum over loops of (M - L).
// An 8-mode circuit with loops [1,1] takes 14 angles.
std::size_t expected_angle_count(int num_modes, const std::vector<int>& loop_lengths);

// Structural validation independent of any device: mode count positive,
// loop lengths in [1, M), occupations non-negative, angle count matching,
// n_samples >= 1. Throws std::invalid_argument naming the defect (for an
// angle-count mismatch, the message names expected vs. actual counts).
void validate_structure(const CircuitSpec& spec);

// Builds the M x M mode-transformation matrix.
//
// Beam-splitter convention: a coupler with angle theta acts on its two
// modes as the real rotation
//     [[cos t, -sin t],
//      [sin t,  cos t]]
// embedded in the identity. Conventions differ across the photonics
// literature; this one makes real-angle circuits produce real unitaries.
// Couplers are applied in angle-consumption order, each left-multiplied
// onto the accumulated product (later couplers act later in time).
Eigen::MatrixXcd build_unitary(const CircuitSpec& spec);

// Max-abs entrywise check of U†U = I.
bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

// Admission envelope of one device. Also reused by the in-process sampler
// backend so local and HTTP execution reject the same specs.
struct DeviceLimits {
  int num_modes = 8;
  int max_photons = 4;
  std::int64_t max_shots = 10'000'000;
  // Empty means any structurally valid loop configuration is accepted;
  // non-empty pins the physical delay-line layout, e.g. {1,1}.
  std::vector<int> allowed_loop_lengths;
};

// Machine-readable rejection reasons, stable across the REST API.
enum class RejectCode {
  mode_mismatch,   // input_state length != device modes
  photon_limit,    // total photons > device maximum
  angle_count,     // bs_angles length != expected
  bad_shots,       // n_samples < 1 or > device max_shots
  bad_state,       // negative occupation or malformed loops
  loop_length,     // loops not allowed by the device
};

const char* reject_code_name(RejectCode code);

struct Rejection {
  RejectCode code;
  std::string message;
};

// Validates a spec against device limits. nullopt means accepted.
std::optional<Rejection> validate_against(const CircuitSpec& spec, const DeviceLimits& limits);

}  // namespace photonq::fock
