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

// Test-only reference implementations. Deliberately brute force and kept
// independent of the library code paths they check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace photonq::oracle {

// Permanent as the literal sum over all n! permutations.
inline std::complex<double> naive_permanent(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> total{0.0, 0.0};
  do {
    std::complex<double> product{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      product *= a(i, perm[static_cast<std::size_t>(i)]);
    }
    total += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Eigen::MatrixXcd random_complex_matrix(int n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = std::complex<double>(dist(gen), dist(gen));
    }
  }
  return a;
}

// Exhaustive QUBO minimum over all 2^V assignments (V <= ~24).
// Returns (min energy, argmin).
inline std::pair<double, std::vector<int>> brute_force_qubo_min(
    const Eigen::MatrixXd& q, double offset) {
  const int v = static_cast<int>(q.rows());
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_bits = 0;
  for (std::uint32_t bits = 0; bits < (1u << v); ++bits) {
    double energy = offset;
    for (int i = 0; i < v; ++i) {
      if (!((bits >> i) & 1u)) continue;
      energy += q(i, i);
      for (int j = i + 1; j < v; ++j) {
        if ((bits >> j) & 1u) energy += 2.0 * q(i, j);
      }
    }
    if (energy < best) {
      best = energy;
      best_bits = bits;
    }
  }
  std::vector<int> assignment(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) assignment[static_cast<std::size_t>(i)] = (best_bits >> i) & 1u;
  return {best, assignment};
}

}  // namespace photonq::oracle
