// zsda/regression.hpp
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

#ifndef ZSDA_REGRESSION_HPP_
#define ZSDA_REGRESSION_HPP_

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"
#include "zsda/grassmann.hpp"
#include "zsda/optimizer.hpp"

namespace zsda {

// A domain descriptor is an M-vector of continuous real factors (e.g. filter
// size, brightness divisor) that parametrizes a data distribution.
using DomainDescriptor = Eigen::VectorXd;

// RBF kernel over min-max-normalized descriptors:
//   k(a, b) = exp(-||a_hat - b_hat||^2 / (2 sigma^2)),
// where x_hat rescales every factor by the [factor_mins, factor_maxs] ranges
// learned from the training descriptors.  A degenerate factor (min == max)
// maps to 0 for every input; queries outside the training range are mapped
// by the same affine rule without clamping, so extrapolation is visible
// rather than silently hidden.
struct KernelSpec {
  double sigma = 0.1;
  Eigen::VectorXd factor_mins;
  Eigen::VectorXd factor_maxs;
};

// {"family":"rbf","sigma":...,"factor_mins":[...],"factor_maxs":[...]}
nlohmann::ordered_json to_json(const KernelSpec &spec);
KernelSpec kernel_spec_from_json(const nlohmann::json &j);

// Training pairs (z_i, P_i): observed domain descriptors with the PCA
// subspaces learned from their data.
struct TrainingSet {
  std::vector<DomainDescriptor> descriptors;
  std::vector<Subspace> subspaces;
};

// Learns per-factor [min, max] ranges over the list.  Throws
// EmptyTrainingSet on an empty list, DimensionMismatch on ragged lengths.
std::pair<Eigen::VectorXd, Eigen::VectorXd> fit_normalizer(
    const std::vector<DomainDescriptor> &descriptors);

// Applies the spec's min-max rescaling to one descriptor.
Eigen::VectorXd normalize_descriptor(const KernelSpec &spec,
                                     const DomainDescriptor &z);

// Normalized kernel weights w_i = k(z, z_i) / sum_j k(z, z_j) over the
// rescaled descriptors.  Non-negative and summing to 1.  Throws
// DegenerateKernel when every kernel value underflows to zero.
Eigen::VectorXd kernel_weights(const KernelSpec &spec,
                               const std::vector<DomainDescriptor> &train,
                               const DomainDescriptor &query);

// Kernel-weighted average of scalar targets; the Euclidean counterpart of
// the subspace predictor, kept as a sanity oracle.
double kernel_regression_euclidean(
    const std::vector<std::pair<DomainDescriptor, double>> &train,
    const KernelSpec &spec, const DomainDescriptor &query);

// Predicts the subspace at `query` as the weighted Frechet mean of the
// training subspaces under the Binet-Cauchy distance: forms kernel weights,
// starts minimize_bc at the anchor of maximal weight (ties broken by lowest
// index), and returns the minimizer with its trace.
std::pair<Subspace, OptimizerTrace> predict_subspace(
    const TrainingSet &train, const KernelSpec &spec,
    const DomainDescriptor &query, const OptimizerConfig &cfg);

}  // namespace zsda

#endif  // ZSDA_REGRESSION_HPP_
