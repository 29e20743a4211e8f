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

#include <cmath>
#include <string>
#include <vector>

namespace photonq::hybrid {

// Candidate network shape decoded from a 9-bit genome.
//
// Layout (bit 0 first; two-bit fields are most-significant-bit first):
//   bit 0    hidden layer count: 0 -> 1, 1 -> 2
//   bits 1-2 width of layer 1, index into {4, 8, 16, 32}
//   bits 3-4 width of layer 2 (kept but unused with 1 layer)
//   bit 5    activation: 0 -> relu, 1 -> tanh
//   bits 6-7 learning-rate exponent, index into {-3, -2, -1}; the spare
//            index 3 also maps to -1
//   bit 8    reserved, ignored
struct Architecture {
  int hidden_layers = 1;
  int width1 = 4;
  int width2 = 4;
  enum class Activation { relu, tanh };
  Activation activation = Activation::relu;
  int lr_exponent = -3;

  double learning_rate() const { return std::pow(10.0, lr_exponent); }
  bool operator==(const Architecture&) const = default;
  std::string describe() const;
};

// Total on 9-bit inputs: every pattern decodes to a valid Architecture.
// Throws std::invalid_argument on any other length.
Architecture decode_genome(const std::vector<int>& bits);

// Canonical encoding; decode(encode(a)) == a for every decodable a.
std::vector<int> encode_genome(const Architecture& arch);

}  // namespace photonq::hybrid
