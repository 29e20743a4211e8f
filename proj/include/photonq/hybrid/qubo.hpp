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
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "photonq/fock/fock_state.hpp"

namespace photonq::hybrid {

// Minimize x^T Q x + offset over binary x, Q symmetric.
class QuboProblem {
 public:
  explicit QuboProblem(Eigen::MatrixXd q, double offset = 0.0);

  int size() const { return static_cast<int>(q_.rows()); }
  double energy(const std::vector<int>& assignment) const;
  const Eigen::MatrixXd& matrix() const { return q_; }
  double offset() const { return offset_; }

  // {"size": V, "entries": [[i, j, value], ...], "offset": 0.0}; entries are
  // mirrored into both triangles.
  static QuboProblem from_json(const nlohmann::json& body);
  nlohmann::json to_json() const;

 private:
  Eigen::MatrixXd q_;
  double offset_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Max-Cut as a QUBO: Q_ii = -sum_j w_ij, Q_ij = w_ij for i != j, offset 0.
// Minimizing gives cut_value(x) = -energy(x). Self-loops are rejected.
QuboProblem qubo_from_maxcut(const std::vector<WeightedEdge>& edges, int num_vertices);

double cut_value(const std::vector<WeightedEdge>& edges, const std::vector<int>& assignment);

// Edge lists as JSON: {"num_vertices": V, "edges": [[u, v, w?], ...]}.
std::vector<WeightedEdge> edges_from_json(const nlohmann::json& body, int& num_vertices);

// Partition of {0..V-1} into device-sized blocks.
struct Tiling {
  std::vector<std::vector<int>> tiles;

  // Contiguous blocks of at most max_tile variables: 12 vars at 8 -> 8/4.
  static Tiling contiguous(int num_vars, int max_tile);

  // Throws std::invalid_argument unless tiles are disjoint, cover 0..V-1,
  // and each fits in max_tile.
  void validate(int num_vars, int max_tile) const;
};

// Photon-presence thresholding: bit_i = min(occupation_i, 1), over the
// first `count` modes.
std::vector<int> outcome_to_bits(const fock::FockState& outcome, std::size_t count);

}  // namespace photonq::hybrid
