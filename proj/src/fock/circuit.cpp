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

#include "photonq/fock/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace photonq::fock {

std::size_t expected_angle_count(int num_modes, const std::vector<int>& loop_lengths) {
  std::size_t count = 0;
  for (int loop : loop_lengths) {
    if (loop >= 1 && loop < num_modes) count += static_cast<std::size_t>(num_modes - loop);
  }
  return count;
}

void validate_structure(const CircuitSpec& spec) {
  if (spec.num_modes < 1) {
    throw std::invalid_argument("num_modes must be >= 1, got " +
                                std::to_string(spec.num_modes));
  }
  if (static_cast<int>(spec.input_state.size()) != spec.num_modes) {
    throw std::invalid_argument(
        "input_state has " + std::to_string(spec.input_state.size()) +
        " entries for a " + std::to_string(spec.num_modes) + "-mode circuit");
  }
  for (int occupation : spec.input_state) {
    if (occupation < 0) {
      throw std::invalid_argument("input_state occupations must be >= 0");
    }
  }
  for (int loop : spec.loop_lengths) {
    if (loop < 1 || loop >= spec.num_modes) {
      throw std::invalid_argument("loop length " + std::to_string(loop) +
                                  " outside [1, " + std::to_string(spec.num_modes) +
                                  ")");
    }
  }
  const std::size_t expected = expected_angle_count(spec.num_modes, spec.loop_lengths);
  if (spec.bs_angles.size() != expected) {
    throw std::invalid_argument("angle count mismatch: expected " +
                                std::to_string(expected) + ", got " +
                                std::to_string(spec.bs_angles.size()));
  }
  if (spec.n_samples < 1) {
    throw std::invalid_argument("n_samples must be >= 1, got " +
                                std::to_string(spec.n_samples));
  }
}

Eigen::MatrixXcd build_unitary(const CircuitSpec& spec) {
  validate_structure(spec);
  const int m = spec.num_modes;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(m, m);
  std::size_t angle_index = 0;
  for (int loop : spec.loop_lengths) {
    for (int i = 0; i + loop < m; ++i) {
      const double theta = spec.bs_angles[angle_index++];
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      // Rotation on modes (i, i+loop): updates two rows of the running
      // product in place, equivalent to left-multiplying the embedded
      // 2x2 block.
      const int a = i;
      const int b = i + loop;
      Eigen::RowVectorXcd row_a = u.row(a);
      Eigen::RowVectorXcd row_b = u.row(b);
      u.row(a) = c * row_a - s * row_b;
      u.row(b) = s * row_a + c * row_b;
    }
  }
  return u;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  const Eigen::MatrixXcd identity =
      Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return (gram - identity).cwiseAbs().maxCoeff() <= tol;
}

const char* reject_code_name(RejectCode code) {
  switch (code) {
    case RejectCode::mode_mismatch: return "MODE_MISMATCH";
    case RejectCode::photon_limit: return "PHOTON_LIMIT";
    case RejectCode::angle_count: return "ANGLE_COUNT";
    case RejectCode::bad_shots: return "BAD_SHOTS";
    case RejectCode::bad_state: return "BAD_STATE";
    case RejectCode::loop_length: return "LOOP_LENGTH";
  }
  return "UNKNOWN";
}

std::optional<Rejection> validate_against(const CircuitSpec& spec,
                                          const DeviceLimits& limits) {
  if (spec.num_modes != limits.num_modes ||
      static_cast<int>(spec.input_state.size()) != limits.num_modes) {
    return Rejection{RejectCode::mode_mismatch,
                     "device has " + std::to_string(limits.num_modes) +
                         " modes, spec uses " +
                         std::to_string(spec.input_state.size())};
  }
  for (int occupation : spec.input_state) {
    if (occupation < 0) {
      return Rejection{RejectCode::bad_state, "occupations must be >= 0"};
    }
  }
  const int photons = total_photons(spec.input_state);
  if (photons > limits.max_photons) {
    return Rejection{RejectCode::photon_limit,
                     std::to_string(photons) + " photons exceed device maximum of " +
                         std::to_string(limits.max_photons)};
  }
  for (int loop : spec.loop_lengths) {
    if (loop < 1 || loop >= spec.num_modes) {
      return Rejection{RejectCode::bad_state,
                       "loop length " + std::to_string(loop) + " outside [1, " +
                           std::to_string(spec.num_modes) + ")"};
    }
  }
  if (!limits.allowed_loop_lengths.empty() &&
      spec.loop_lengths != limits.allowed_loop_lengths) {
    return Rejection{RejectCode::loop_length,
                     "device delay lines do not match requested loop_lengths"};
  }
  const std::size_t expected = expected_angle_count(spec.num_modes, spec.loop_lengths);
  if (spec.bs_angles.size() != expected) {
    return Rejection{RejectCode::angle_count,
                     "expected " + std::to_string(expected) + " angles, got " +
                         std::to_string(spec.bs_angles.size())};
  }
  if (spec.n_samples < 1 || spec.n_samples > limits.max_shots) {
    return Rejection{RejectCode::bad_shots,
                     "n_samples must be in [1, " + std::to_string(limits.max_shots) +
                         "], got " + std::to_string(spec.n_samples)};
  }
  return std::nullopt;
}

}  // namespace photonq::fock
