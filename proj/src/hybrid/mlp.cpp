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

#include "photonq/hybrid/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace photonq::hybrid {

namespace {

Eigen::VectorXd activate(const Eigen::VectorXd& z, Architecture::Activation activation) {
  if (activation == Architecture::Activation::relu) {
    return z.cwiseMax(0.0);
  }
  return z.array().tanh().matrix();
}

Eigen::VectorXd activate_grad(const Eigen::VectorXd& z,
                              Architecture::Activation activation) {
  if (activation == Architecture::Activation::relu) {
    return (z.array() > 0.0).cast<double>().matrix();
  }
  return (1.0 - z.array().tanh().square()).matrix();
}

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  const Eigen::ArrayXd shifted = logits.array() - logits.maxCoeff();
  const Eigen::ArrayXd exps = shifted.exp();
  return (exps / exps.sum()).matrix();
}

}  // namespace

Eigen::VectorXd MlpModel::logits(const Eigen::VectorXd& input) const {
  Eigen::VectorXd h = input;
  for (std::size_t layer = 0; layer + 1 < weights.size(); ++layer) {
    h = activate(weights[layer] * h + biases[layer], arch.activation);
  }
  return weights.back() * h + biases.back();
}

int MlpModel::predict(const Eigen::VectorXd& input) const {
  Eigen::Index best = 0;
  logits(input).maxCoeff(&best);
  return static_cast<int>(best);
}

MlpModel init_mlp(const Architecture& arch, int input_dim, int num_classes,
                  std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<int> dims{input_dim, arch.width1};
  if (arch.hidden_layers == 2) dims.push_back(arch.width2);
  dims.push_back(num_classes);

  MlpModel model;
  model.arch = arch;
  for (std::size_t layer = 0; layer + 1 < dims.size(); ++layer) {
    const int fan_in = dims[layer];
    const int fan_out = dims[layer + 1];
    // He scaling for relu, Xavier for tanh and the linear head.
    const bool relu_hidden = arch.activation == Architecture::Activation::relu &&
                             layer + 2 < dims.size();
    const double scale = relu_hidden ? std::sqrt(2.0 / fan_in) : std::sqrt(1.0 / fan_in);
    Eigen::MatrixXd w(fan_out, fan_in);
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        w(i, j) = scale * normal(gen);
      }
    }
    model.weights.push_back(std::move(w));
    model.biases.push_back(Eigen::VectorXd::Zero(fan_out));
  }
  return model;
}

double accuracy(const MlpModel& model, const Dataset& dataset) {
  if (dataset.num_samples() == 0) return 0.0;
  int correct = 0;
  for (int i = 0; i < dataset.num_samples(); ++i) {
    if (model.predict(dataset.features.row(i).transpose()) ==
        dataset.labels[static_cast<std::size_t>(i)]) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / dataset.num_samples();
}

TrainReport train_mlp(const Architecture& arch, const TrainValSplit& split, int epochs,
                      std::uint64_t seed, int batch_size) {
  TrainReport report;
  report.model =
      init_mlp(arch, split.train.num_features(), split.train.num_classes(), seed);
  MlpModel& model = report.model;
  const double lr = arch.learning_rate();
  const int n = split.train.num_samples();
  std::mt19937_64 gen(seed ^ 0x5eedULL);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  auto mean_train_loss = [&]() {
    double loss = 0.0;
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd probs =
          softmax(model.logits(split.train.features.row(i).transpose()));
      loss -= std::log(std::max(
          probs(split.train.labels[static_cast<std::size_t>(i)]), 1e-300));
    }
    return loss / std::max(1, n);
  };

  for (int epoch = 0; epoch < epochs && !report.diverged; ++epoch) {
    std::shuffle(order.begin(), order.end(), gen);
    for (int start = 0; start < n; start += batch_size) {
      const int end = std::min(n, start + batch_size);
      const int batch = end - start;

      std::vector<Eigen::MatrixXd> grad_w;
      std::vector<Eigen::VectorXd> grad_b;
      for (std::size_t layer = 0; layer < model.weights.size(); ++layer) {
        grad_w.emplace_back(Eigen::MatrixXd::Zero(model.weights[layer].rows(),
                                                  model.weights[layer].cols()));
        grad_b.emplace_back(Eigen::VectorXd::Zero(model.biases[layer].size()));
      }

      for (int b = start; b < end; ++b) {
        const int row = order[static_cast<std::size_t>(b)];
        const Eigen::VectorXd input = split.train.features.row(row).transpose();
        const int label = split.train.labels[static_cast<std::size_t>(row)];

        // Forward pass, keeping pre-activations for backprop.
        std::vector<Eigen::VectorXd> activations{input};
        std::vector<Eigen::VectorXd> pre;
        Eigen::VectorXd h = input;
        for (std::size_t layer = 0; layer + 1 < model.weights.size(); ++layer) {
          pre.push_back(model.weights[layer] * h + model.biases[layer]);
          h = activate(pre.back(), arch.activation);
          activations.push_back(h);
        }
        const Eigen::VectorXd logits = model.weights.back() * h + model.biases.back();

        // Softmax cross-entropy gradient.
        Eigen::VectorXd delta = softmax(logits);
        delta(label) -= 1.0;

        for (std::size_t layer = model.weights.size(); layer-- > 0;) {
          grad_w[layer] += delta * activations[layer].transpose();
          grad_b[layer] += delta;
          if (layer > 0) {
            delta = (model.weights[layer].transpose() * delta)
                        .cwiseProduct(activate_grad(pre[layer - 1], arch.activation));
          }
        }
      }

      for (std::size_t layer = 0; layer < model.weights.size(); ++layer) {
        model.weights[layer] -= (lr / batch) * grad_w[layer];
        model.biases[layer] -= (lr / batch) * grad_b[layer];
        if (!model.weights[layer].allFinite()) {
          report.diverged = true;
        }
      }
      if (report.diverged) break;
    }
    if (!report.diverged) {
      const double loss = mean_train_loss();
      if (!std::isfinite(loss)) {
        report.diverged = true;
        break;
      }
      report.epoch_losses.push_back(loss);
    }
  }

  report.val_accuracy = report.diverged ? 0.0 : accuracy(model, split.val);
  return report;
}

}  // namespace photonq::hybrid
