// zsda/classify.cpp
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

#include "zsda/classify.hpp"

#include <string>

#include "zsda/errors.hpp"

namespace zsda {

namespace {

void check_classify_shapes(const Eigen::MatrixXd &train,
                           const Eigen::VectorXi &labels,
                           const Eigen::MatrixXd &test) {
  if (train.rows() < 1) throw InvalidInput("1-NN: empty training set");
  if (labels.size() != train.rows()) {
    throw DimensionMismatch("1-NN: label count " +
                            std::to_string(labels.size()) +
                            " does not match training rows " +
                            std::to_string(train.rows()));
  }
  if (test.cols() != train.cols()) {
    throw DimensionMismatch("1-NN: feature dimension mismatch (" +
                            std::to_string(test.cols()) + " vs " +
                            std::to_string(train.cols()) + ")");
  }
}

// Nearest training row to test row i under plain squared Euclidean distance.
inline int euclidean_nearest(const Eigen::MatrixXd &train,
                             const Eigen::MatrixXd &test, Eigen::Index i) {
  Eigen::Index best = 0;
  double best_d = (test.row(i) - train.row(0)).squaredNorm();
  for (Eigen::Index j = 1; j < train.rows(); ++j) {
    const double d = (test.row(i) - train.row(j)).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return static_cast<int>(best);
}

// Nearest training row to test row i under the G-weighted squared distance,
// expanded as a^T G a - 2 a^T G b + b^T G b with the train-side quantities
// (gb = G b_j, qb_j = b_j^T G b_j) precomputed once.
inline int gfk_nearest(const Eigen::MatrixXd &train,
                       const Eigen::MatrixXd &test,
                       const Eigen::MatrixXd &g, const Eigen::MatrixXd &gb,
                       const Eigen::VectorXd &qb, Eigen::Index i) {
  const Eigen::VectorXd ga = g * test.row(i).transpose();
  const double qa = test.row(i).dot(ga);
  Eigen::Index best = 0;
  double best_d = qa - 2.0 * gb.row(0).dot(test.row(i)) + qb(0);
  for (Eigen::Index j = 1; j < train.rows(); ++j) {
    const double d = qa - 2.0 * gb.row(j).dot(test.row(i)) + qb(j);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return static_cast<int>(best);
}

}  // namespace

Eigen::VectorXi euclidean_classify(const Eigen::MatrixXd &train_features,
                                   const Eigen::VectorXi &train_labels,
                                   const Eigen::MatrixXd &test_features) {
  check_classify_shapes(train_features, train_labels, test_features);
  const Eigen::Index m = test_features.rows();
  Eigen::VectorXi out(m);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < m; ++i) {
    out(i) = train_labels(euclidean_nearest(train_features, test_features, i));
  }
  return out;
}

Eigen::VectorXi euclidean_classify_serial(
    const Eigen::MatrixXd &train_features, const Eigen::VectorXi &train_labels,
    const Eigen::MatrixXd &test_features) {
  check_classify_shapes(train_features, train_labels, test_features);
  Eigen::VectorXi out(test_features.rows());
  for (Eigen::Index i = 0; i < test_features.rows(); ++i) {
    out(i) = train_labels(euclidean_nearest(train_features, test_features, i));
  }
  return out;
}

Eigen::VectorXi gfk_classify(const Eigen::MatrixXd &train_features,
                             const Eigen::VectorXi &train_labels,
                             const Eigen::MatrixXd &test_features,
                             const GfkKernel &g) {
  check_classify_shapes(train_features, train_labels, test_features);
  if (g.g.rows() != train_features.cols() ||
      g.g.cols() != train_features.cols()) {
    throw DimensionMismatch("gfk_classify: kernel size mismatch");
  }
  const Eigen::MatrixXd gb = train_features * g.g;  // symmetric G
  const Eigen::VectorXd qb =
      (gb.array() * train_features.array()).rowwise().sum();
  const Eigen::Index m = test_features.rows();
  Eigen::VectorXi out(m);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < m; ++i) {
    out(i) = train_labels(
        gfk_nearest(train_features, test_features, g.g, gb, qb, i));
  }
  return out;
}

Eigen::VectorXi gfk_classify_serial(const Eigen::MatrixXd &train_features,
                                    const Eigen::VectorXi &train_labels,
                                    const Eigen::MatrixXd &test_features,
                                    const GfkKernel &g) {
  check_classify_shapes(train_features, train_labels, test_features);
  if (g.g.rows() != train_features.cols() ||
      g.g.cols() != train_features.cols()) {
    throw DimensionMismatch("gfk_classify: kernel size mismatch");
  }
  const Eigen::MatrixXd gb = train_features * g.g;
  const Eigen::VectorXd qb =
      (gb.array() * train_features.array()).rowwise().sum();
  Eigen::VectorXi out(test_features.rows());
  for (Eigen::Index i = 0; i < test_features.rows(); ++i) {
    out(i) = train_labels(
        gfk_nearest(train_features, test_features, g.g, gb, qb, i));
  }
  return out;
}

Eigen::VectorXi sa_classify(const Eigen::MatrixXd &train_features,
                            const Eigen::VectorXi &train_labels,
                            const Eigen::MatrixXd &test_features,
                            const Subspace &source, const Subspace &target,
                            const AlignmentMap &map) {
  check_classify_shapes(train_features, train_labels, test_features);
  if (source.ambient_dim() != train_features.cols() ||
      target.ambient_dim() != train_features.cols() ||
      source.dim() != target.dim() || map.m.rows() != source.dim() ||
      map.m.cols() != source.dim()) {
    throw DimensionMismatch("sa_classify: subspace/map shape mismatch");
  }
  const Eigen::MatrixXd train_proj =
      train_features * (source.basis * map.m);
  const Eigen::MatrixXd test_proj = test_features * target.basis;
  return euclidean_classify(train_proj, train_labels, test_proj);
}

}  // namespace zsda
