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

#include "photonq/hybrid/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace photonq::hybrid {

Dataset load_csv_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty dataset: " + path);

  std::vector<std::vector<double>> rows;
  std::vector<std::string> raw_labels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() < 2) throw std::runtime_error("malformed row: " + line);
    std::vector<double> values;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      values.push_back(std::stod(cells[i]));
    }
    rows.push_back(std::move(values));
    raw_labels.push_back(cells.back());
  }
  if (rows.empty()) throw std::runtime_error("dataset has no rows: " + path);

  Dataset dataset;
  std::map<std::string, int> class_ids;
  for (const auto& label : raw_labels) {
    if (!class_ids.count(label)) {
      const int id = static_cast<int>(class_ids.size());
      class_ids[label] = id;
      dataset.class_names.push_back(label);
    }
  }
  // class_names in first-appearance order, ids to match
  dataset.class_names.clear();
  dataset.class_names.resize(class_ids.size());
  for (const auto& [name, id] : class_ids) dataset.class_names[static_cast<std::size_t>(id)] = name;

  dataset.features.resize(static_cast<Eigen::Index>(rows.size()),
                          static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw std::runtime_error("inconsistent column count in dataset");
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      dataset.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
    }
    dataset.labels.push_back(class_ids.at(raw_labels[r]));
  }
  return dataset;
}

TrainValSplit stratified_split(const Dataset& dataset, double train_fraction,
                               std::uint64_t seed) {
  if (train_fraction <= 0.0 || train_fraction >= 1.0) {
    throw std::invalid_argument("train_fraction must be in (0, 1)");
  }
  std::mt19937_64 gen(seed);
  std::vector<int> train_rows;
  std::vector<int> val_rows;
  for (int cls = 0; cls < dataset.num_classes(); ++cls) {
    std::vector<int> members;
    for (int i = 0; i < dataset.num_samples(); ++i) {
      if (dataset.labels[static_cast<std::size_t>(i)] == cls) members.push_back(i);
    }
    std::shuffle(members.begin(), members.end(), gen);
    const auto cut = static_cast<std::size_t>(
        std::round(train_fraction * static_cast<double>(members.size())));
    for (std::size_t i = 0; i < members.size(); ++i) {
      (i < cut ? train_rows : val_rows).push_back(members[i]);
    }
  }
  std::shuffle(train_rows.begin(), train_rows.end(), gen);
  std::shuffle(val_rows.begin(), val_rows.end(), gen);

  auto take = [&dataset](const std::vector<int>& rows) {
    Dataset subset;
    subset.class_names = dataset.class_names;
    subset.features.resize(static_cast<Eigen::Index>(rows.size()),
                           dataset.features.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      subset.features.row(static_cast<Eigen::Index>(i)) = dataset.features.row(rows[i]);
      subset.labels.push_back(dataset.labels[static_cast<std::size_t>(rows[i])]);
    }
    return subset;
  };

  TrainValSplit split{take(train_rows), take(val_rows)};

  // Standardize with train statistics only.
  const Eigen::RowVectorXd mean = split.train.features.colwise().mean();
  Eigen::RowVectorXd stddev =
      ((split.train.features.rowwise() - mean).array().square().colwise().sum() /
       std::max(1.0, static_cast<double>(split.train.num_samples() - 1)))
          .sqrt();
  for (Eigen::Index c = 0; c < stddev.size(); ++c) {
    if (stddev(c) < 1e-12) stddev(c) = 1.0;
  }
  split.train.features = (split.train.features.rowwise() - mean).array().rowwise() /
                         stddev.array();
  split.val.features =
      (split.val.features.rowwise() - mean).array().rowwise() / stddev.array();
  return split;
}

}  // namespace photonq::hybrid
