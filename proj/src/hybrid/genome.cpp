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

#include "photonq/hybrid/genome.hpp"

#include <array>
#include <stdexcept>

namespace photonq::hybrid {

namespace {

constexpr std::array<int, 4> kWidths{4, 8, 16, 32};
constexpr std::array<int, 4> kLrExponents{-3, -2, -1, -1};  // index 3 aliases -1

int width_index(int width) {
  for (std::size_t i = 0; i < kWidths.size(); ++i) {
    if (kWidths[i] == width) return static_cast<int>(i);
  }
  throw std::invalid_argument("width must be one of 4, 8, 16, 32");
}

int two_bit(const std::vector<int>& bits, std::size_t first) {
  return (bits[first] ? 2 : 0) + (bits[first + 1] ? 1 : 0);
}

}  // namespace

std::string Architecture::describe() const {
  std::string out = "mlp-" + std::to_string(width1);
  if (hidden_layers == 2) out += "x" + std::to_string(width2);
  out += activation == Activation::relu ? "-relu" : "-tanh";
  out += "-lr1e" + std::to_string(lr_exponent);
  return out;
}

Architecture decode_genome(const std::vector<int>& bits) {
  if (bits.size() != 9) {
    throw std::invalid_argument("genome must be exactly 9 bits, got " +
                                std::to_string(bits.size()));
  }
  Architecture arch;
  arch.hidden_layers = bits[0] ? 2 : 1;
  arch.width1 = kWidths[static_cast<std::size_t>(two_bit(bits, 1))];
  arch.width2 = kWidths[static_cast<std::size_t>(two_bit(bits, 3))];
  arch.activation =
      bits[5] ? Architecture::Activation::tanh : Architecture::Activation::relu;
  arch.lr_exponent = kLrExponents[static_cast<std::size_t>(two_bit(bits, 6))];
  return arch;
}

std::vector<int> encode_genome(const Architecture& arch) {
  if (arch.hidden_layers != 1 && arch.hidden_layers != 2) {
    throw std::invalid_argument("hidden_layers must be 1 or 2");
  }
  if (arch.lr_exponent < -3 || arch.lr_exponent > -1) {
    throw std::invalid_argument("lr exponent must be in {-3, -2, -1}");
  }
  const int w1 = width_index(arch.width1);
  const int w2 = width_index(arch.width2);
  const int lr = arch.lr_exponent + 3;  // canonical index 0..2
  return {arch.hidden_layers == 2 ? 1 : 0,
          (w1 >> 1) & 1,
          w1 & 1,
          (w2 >> 1) & 1,
          w2 & 1,
          arch.activation == Architecture::Activation::tanh ? 1 : 0,
          (lr >> 1) & 1,
          lr & 1,
          0};
}

}  // namespace photonq::hybrid
