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
#include <complex>

namespace photonq::fock {

// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
// subset iteration: O(2^n * n) time, O(n) extra space. Returns 1 for the
// empty 0x0 matrix. Throws std::invalid_argument for non-square input.
std::complex<double> permanent(const Eigen::MatrixXcd& matrix);

}  // namespace photonq::fock
