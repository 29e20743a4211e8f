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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace photonq::fock {

// Occupation-number vector: photon count per qumode. Used for both input
// states and measurement outcomes. Lexicographic vector ordering doubles
// as the canonical outcome ordering.
using FockState = std::vector<int>;

// Shot histogram: outcome -> count. std::map keeps iteration order
// deterministic (lexicographic over outcomes).
using Histogram = std::map<FockState, std::int64_t>;

int total_photons(const FockState& state);

// "(1,0,2)" - the wire key format for histogram entries.
std::string format_state(const FockState& state);

// Inverse of format_state. Accepts with or without parentheses.
// Throws std::invalid_argument on malformed input.
FockState parse_state(std::string_view text);

std::int64_t total_counts(const Histogram& histogram);

// Key-wise count addition; used when merging shards from multiple devices.
void merge_into(Histogram& target, const Histogram& source);

}  // namespace photonq::fock
