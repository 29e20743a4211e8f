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

#include "photonq/fock/permanent.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace photonq::fock {

// Ryser:  perm(A) = (-1)^n * sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij
// Subsets are visited in Gray-code order so each step updates the row sums
// with a single column add or subtract.
std::complex<double> permanent(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("permanent requires a square matrix");
  }
  const int n = static_cast<int>(matrix.rows());
  if (n == 0) return {1.0, 0.0};
  if (n > 62) {
    throw std::invalid_argument("permanent limited to n <= 62");
  }

  std::vector<std::complex<double>> row_sums(static_cast<std::size_t>(n), {0.0, 0.0});
  std::complex<double> total{0.0, 0.0};
  std::uint64_t gray_prev = 0;
  const std::uint64_t subset_count = 1ULL << n;

  for (std::uint64_t k = 1; k < subset_count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ gray_prev;
    const int col = std::countr_zero(changed);
    const double direction = (gray & changed) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
      row_sums[static_cast<std::size_t>(i)] += direction * matrix(i, col);
    }
    std::complex<double> product{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      product *= row_sums[static_cast<std::size_t>(i)];
    }
    const int popcount = std::popcount(gray);
    total += (popcount % 2 == 0 ? 1.0 : -1.0) * product;
    gray_prev = gray;
  }

  return (n % 2 == 0 ? 1.0 : -1.0) * total;
}

}  // namespace photonq::fock
