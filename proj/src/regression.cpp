// zsda/regression.cpp
//
// Copyright 2026 The zsda authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#include "zsda/regression.hpp"

#include <cmath>
#include <string>

#include "zsda/errors.hpp"

namespace zsda {

nlohmann::ordered_json to_json(const KernelSpec &spec) {
  nlohmann::ordered_json j;
  j["family"] = "rbf";
  j["sigma"] = spec.sigma;
  j["factor_mins"] = std::vector<double>(
      spec.factor_mins.data(), spec.factor_mins.data() + spec.factor_mins.size());
  j["factor_maxs"] = std::vector<double>(
      spec.factor_maxs.data(), spec.factor_maxs.data() + spec.factor_maxs.size());
  return j;
}

KernelSpec kernel_spec_from_json(const nlohmann::json &j) {
  if (j.value("family", "rbf") != std::string("rbf")) {
    throw InvalidConfig("kernel family must be \"rbf\"");
  }
  KernelSpec spec;
  spec.sigma = j.at("sigma").get<double>();
  if (!(spec.sigma > 0.0)) throw InvalidConfig("sigma must be positive");
  const auto mins = j.at("factor_mins").get<std::vector<double>>();
  const auto maxs = j.at("factor_maxs").get<std::vector<double>>();
  if (mins.size() != maxs.size()) {
    throw InvalidConfig("factor_mins/factor_maxs length mismatch");
  }
  spec.factor_mins = Eigen::Map<const Eigen::VectorXd>(
      mins.data(), static_cast<Eigen::Index>(mins.size()));
  spec.factor_maxs = Eigen::Map<const Eigen::VectorXd>(
      maxs.data(), static_cast<Eigen::Index>(maxs.size()));
  for (Eigen::Index i = 0; i < spec.factor_mins.size(); ++i) {
    if (spec.factor_maxs(i) < spec.factor_mins(i)) {
      throw InvalidConfig("factor_maxs below factor_mins");
    }
  }
  return spec;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> fit_normalizer(
    const std::vector<DomainDescriptor> &descriptors) {
  if (descriptors.empty()) {
    throw EmptyTrainingSet("fit_normalizer: no descriptors");
  }
  const Eigen::Index m = descriptors[0].size();
  Eigen::VectorXd mins = descriptors[0], maxs = descriptors[0];
  for (const DomainDescriptor &z : descriptors) {
    if (z.size() != m) {
      throw DimensionMismatch("fit_normalizer: inconsistent factor counts");
    }
    if (!z.allFinite()) {
      throw InvalidInput("fit_normalizer: non-finite descriptor entry");
    }
    mins = mins.cwiseMin(z);
    maxs = maxs.cwiseMax(z);
  }
  return {mins, maxs};
}

Eigen::VectorXd normalize_descriptor(const KernelSpec &spec,
                                     const DomainDescriptor &z) {
  if (z.size() != spec.factor_mins.size()) {
    throw DimensionMismatch("descriptor length does not match normalizer");
  }
  Eigen::VectorXd out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double range = spec.factor_maxs(i) - spec.factor_mins(i);
    // A factor constant across training carries no information: map it to 0
    // for every input instead of dividing by zero.
    out(i) = range > 0.0 ? (z(i) - spec.factor_mins(i)) / range : 0.0;
  }
  return out;
}

Eigen::VectorXd kernel_weights(const KernelSpec &spec,
                               const std::vector<DomainDescriptor> &train,
                               const DomainDescriptor &query) {
  if (train.empty()) throw EmptyTrainingSet("kernel_weights: no descriptors");
  if (!(spec.sigma > 0.0)) throw InvalidConfig("sigma must be positive");
  const Eigen::VectorXd q = normalize_descriptor(spec, query);
  Eigen::VectorXd k(static_cast<Eigen::Index>(train.size()));
  const double inv_two_sigma2 = 1.0 / (2.0 * spec.sigma * spec.sigma);
  for (size_t i = 0; i < train.size(); ++i) {
    const Eigen::VectorXd zi = normalize_descriptor(spec, train[i]);
    k(static_cast<Eigen::Index>(i)) =
        std::exp(-(q - zi).squaredNorm() * inv_two_sigma2);
  }
  const double total = k.sum();
  if (total <= 0.0) {
    throw DegenerateKernel(
        "kernel_weights: every kernel value underflowed to zero (query too "
        "far from training descriptors at sigma = " +
        std::to_string(spec.sigma) + ")");
  }
  return k / total;
}

double kernel_regression_euclidean(
    const std::vector<std::pair<DomainDescriptor, double>> &train,
    const KernelSpec &spec, const DomainDescriptor &query) {
  std::vector<DomainDescriptor> zs;
  zs.reserve(train.size());
  for (const auto &[z, y] : train) zs.push_back(z);
  const Eigen::VectorXd w = kernel_weights(spec, zs, query);
  double out = 0.0;
  for (size_t i = 0; i < train.size(); ++i) {
    out += w(static_cast<Eigen::Index>(i)) * train[i].second;
  }
  return out;
}

std::pair<Subspace, OptimizerTrace> predict_subspace(
    const TrainingSet &train, const KernelSpec &spec,
    const DomainDescriptor &query, const OptimizerConfig &cfg) {
  if (train.descriptors.size() != train.subspaces.size()) {
    throw InvalidInput("predict_subspace: descriptor/subspace count mismatch");
  }
  WeightedAnchorSet set;
  set.anchors = train.subspaces;
  set.weights = kernel_weights(spec, train.descriptors, query);
  validate(set);

  // Start at the most-similar observed domain; the objective is non-convex
  // and this targets the relevant basin.  Ties resolve to the lowest index.
  Eigen::Index init_idx = 0;
  set.weights.maxCoeff(&init_idx);
  return minimize_bc(set, set.anchors[static_cast<size_t>(init_idx)], cfg);
}

}  // namespace zsda
