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

#include "photonq/fock/fock_state.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace photonq::fock {

int total_photons(const FockState& state) {
  return std::accumulate(state.begin(), state.end(), 0);
}

std::string format_state(const FockState& state) {
  std::string out = "(";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(state[i]);
  }
  out += ')';
  return out;
}

FockState parse_state(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') {
      throw std::invalid_argument("unbalanced parentheses in occupation tuple: " +
                                  std::string(text));
    }
    text = text.substr(1, text.size() - 2);
  }
  FockState state;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed occupation tuple: " + std::string(text));
    }
    state.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return state;
}

std::int64_t total_counts(const Histogram& histogram) {
  std::int64_t total = 0;
  for (const auto& [state, count] : histogram) total += count;
  return total;
}

void merge_into(Histogram& target, const Histogram& source) {
  for (const auto& [state, count] : source) target[state] += count;
}

}  // namespace photonq::fock
