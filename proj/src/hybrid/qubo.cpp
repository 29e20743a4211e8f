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

#include "photonq/hybrid/qubo.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace photonq::hybrid {

using nlohmann::json;

QuboProblem::QuboProblem(Eigen::MatrixXd q, double offset)
    : q_(std::move(q)), offset_(offset) {
  if (q_.rows() < 1 || q_.rows() != q_.cols()) {
    throw std::invalid_argument("QUBO matrix must be square with V >= 1");
  }
  if ((q_ - q_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("QUBO matrix must be symmetric within 1e-12");
  }
}

double QuboProblem::energy(const std::vector<int>& assignment) const {
  if (static_cast<int>(assignment.size()) != size()) {
    throw std::invalid_argument("assignment length does not match QUBO size");
  }
  double total = offset_;
  for (int i = 0; i < size(); ++i) {
    if (!assignment[static_cast<std::size_t>(i)]) continue;
    total += q_(i, i);
    for (int j = i + 1; j < size(); ++j) {
      if (assignment[static_cast<std::size_t>(j)]) total += 2.0 * q_(i, j);
    }
  }
  return total;
}

QuboProblem QuboProblem::from_json(const json& body) {
  const int v = body.at("size").get<int>();
  if (v < 1) throw std::invalid_argument("QUBO size must be >= 1");
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(v, v);
  for (const auto& entry : body.at("entries")) {
    const int i = entry.at(0).get<int>();
    const int j = entry.at(1).get<int>();
    const double value = entry.at(2).get<double>();
    if (i < 0 || i >= v || j < 0 || j >= v) {
      throw std::invalid_argument("QUBO entry index out of range");
    }
    q(i, j) = value;
    q(j, i) = value;
  }
  return QuboProblem(std::move(q), body.value("offset", 0.0));
}

json QuboProblem::to_json() const {
  json entries = json::array();
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      if (q_(i, j) != 0.0) entries.push_back({i, j, q_(i, j)});
    }
  }
  return json{{"size", size()}, {"entries", entries}, {"offset", offset_}};
}

QuboProblem qubo_from_maxcut(const std::vector<WeightedEdge>& edges, int num_vertices) {
  if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(num_vertices, num_vertices);
  for (const auto& edge : edges) {
    if (edge.u == edge.v) {
      throw std::invalid_argument("self-loops are not allowed in Max-Cut");
    }
    if (edge.u < 0 || edge.u >= num_vertices || edge.v < 0 || edge.v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!std::isfinite(edge.weight)) {
      throw std::invalid_argument("edge weights must be finite");
    }
    q(edge.u, edge.v) += edge.weight;
    q(edge.v, edge.u) += edge.weight;
    q(edge.u, edge.u) -= edge.weight;
    q(edge.v, edge.v) -= edge.weight;
  }
  return QuboProblem(std::move(q), 0.0);
}

double cut_value(const std::vector<WeightedEdge>& edges, const std::vector<int>& assignment) {
  double cut = 0.0;
  for (const auto& edge : edges) {
    if (assignment.at(static_cast<std::size_t>(edge.u)) !=
        assignment.at(static_cast<std::size_t>(edge.v))) {
      cut += edge.weight;
    }
  }
  return cut;
}

std::vector<WeightedEdge> edges_from_json(const json& body, int& num_vertices) {
  num_vertices = body.at("num_vertices").get<int>();
  std::vector<WeightedEdge> edges;
  for (const auto& entry : body.at("edges")) {
    WeightedEdge edge;
    edge.u = entry.at(0).get<int>();
    edge.v = entry.at(1).get<int>();
    edge.weight = entry.size() > 2 ? entry.at(2).get<double>() : 1.0;
    edges.push_back(edge);
  }
  return edges;
}

Tiling Tiling::contiguous(int num_vars, int max_tile) {
  if (num_vars < 1 || max_tile < 1) {
    throw std::invalid_argument("tiling needs positive sizes");
  }
  Tiling tiling;
  for (int start = 0; start < num_vars; start += max_tile) {
    std::vector<int> tile;
    for (int i = start; i < std::min(num_vars, start + max_tile); ++i) {
      tile.push_back(i);
    }
    tiling.tiles.push_back(std::move(tile));
  }
  return tiling;
}

void Tiling::validate(int num_vars, int max_tile) const {
  std::vector<int> seen(static_cast<std::size_t>(num_vars), 0);
  for (const auto& tile : tiles) {
    if (tile.empty() || static_cast<int>(tile.size()) > max_tile) {
      throw std::invalid_argument("tile size must be in [1, " +
                                  std::to_string(max_tile) + "]");
    }
    for (int var : tile) {
      if (var < 0 || var >= num_vars) {
        throw std::invalid_argument("tile variable out of range");
      }
      if (seen[static_cast<std::size_t>(var)]++) {
        throw std::invalid_argument("tiles must be disjoint");
      }
    }
  }
  for (int i = 0; i < num_vars; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("tiles must cover every variable");
    }
  }
}

std::vector<int> outcome_to_bits(const fock::FockState& outcome, std::size_t count) {
  std::vector<int> bits(count, 0);
  for (std::size_t i = 0; i < count && i < outcome.size(); ++i) {
    bits[i] = outcome[i] > 0 ? 1 : 0;
  }
  return bits;
}

}  // namespace photonq::hybrid
