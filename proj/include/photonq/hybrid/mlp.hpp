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
#include <vector>

#include "photonq/hybrid/dataset.hpp"
#include "photonq/hybrid/genome.hpp"

namespace photonq::hybrid {

// Feedforward classifier with the genome's hidden shape and a linear
// softmax head.
struct MlpModel {
  Architecture arch;
  std::vector<Eigen::MatrixXd> weights;  // layer l: rows = out, cols = in
  std::vector<Eigen::VectorXd> biases;

  Eigen::VectorXd logits(const Eigen::VectorXd& input) const;
  int predict(const Eigen::VectorXd& input) const;
};

MlpModel init_mlp(const Architecture& arch, int input_dim, int num_classes,
                  std::uint64_t seed);

struct TrainReport {
  MlpModel model;
  double val_accuracy = 0.0;
  std::vector<double> epoch_losses;  // mean train cross-entropy after each epoch
  bool diverged = false;
};

// Mini-batch SGD with softmax cross-entropy at the genome's learning rate.
// Deterministic under (arch, seed). A non-finite loss stops training and
// reports val_accuracy 0 instead of raising.
TrainReport train_mlp(const Architecture& arch, const TrainValSplit& split, int epochs,
                      std::uint64_t seed, int batch_size = 16);

double accuracy(const MlpModel& model, const Dataset& dataset);

}  // namespace photonq::hybrid
