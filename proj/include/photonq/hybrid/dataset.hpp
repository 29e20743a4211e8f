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
#include <cstdint>
#include <string>
#include <vector>

namespace photonq::hybrid {

struct Dataset {
  Eigen::MatrixXd features;  // one row per sample
  std::vector<int> labels;
  std::vector<std::string> class_names;

  int num_samples() const { return static_cast<int>(features.rows()); }
  int num_features() const { return static_cast<int>(features.cols()); }
  int num_classes() const { return static_cast<int>(class_names.size()); }
};

// CSV with a header row, numeric feature columns, and a string class label
// in the last column (the bundled iris.csv shape).
Dataset load_csv_dataset(const std::string& path);

struct TrainValSplit {
  Dataset train;
  Dataset val;
};

// Per-class shuffled split, so validation keeps the class balance. Features
// are standardized with train-split statistics.
TrainValSplit stratified_split(const Dataset& dataset, double train_fraction,
                               std::uint64_t seed);

}  // namespace photonq::hybrid
