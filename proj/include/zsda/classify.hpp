// zsda/classify.hpp
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

#ifndef ZSDA_CLASSIFY_HPP_
#define ZSDA_CLASSIFY_HPP_

#include <Eigen/Dense>

#include "zsda/adaptation.hpp"
#include "zsda/grassmann.hpp"

namespace zsda {

// 1-nearest-neighbor classifiers.  Ties always break to the lowest training
// index (strict less-than scan), so results are deterministic and identical
// between the serial and OpenMP paths: the parallel versions distribute
// whole test points, whose per-point arithmetic is unchanged.
//
// The *_serial functions are deliberately plain reference implementations
// kept for testing and benchmarking against the parallel kernels.

// Euclidean 1-NN on raw features.
Eigen::VectorXi euclidean_classify(const Eigen::MatrixXd &train_features,
                                   const Eigen::VectorXi &train_labels,
                                   const Eigen::MatrixXd &test_features);
Eigen::VectorXi euclidean_classify_serial(
    const Eigen::MatrixXd &train_features,
    const Eigen::VectorXi &train_labels,
    const Eigen::MatrixXd &test_features);

// 1-NN under the GFK-induced squared distance
//   d^2(a, b) = (a - b)^T G (a - b).
Eigen::VectorXi gfk_classify(const Eigen::MatrixXd &train_features,
                             const Eigen::VectorXi &train_labels,
                             const Eigen::MatrixXd &test_features,
                             const GfkKernel &g);
Eigen::VectorXi gfk_classify_serial(const Eigen::MatrixXd &train_features,
                                    const Eigen::VectorXi &train_labels,
                                    const Eigen::MatrixXd &test_features,
                                    const GfkKernel &g);

// Subspace-Alignment 1-NN: training rows projected by P_S M, test rows by
// P_T, Euclidean 1-NN in the K-dimensional aligned space.
Eigen::VectorXi sa_classify(const Eigen::MatrixXd &train_features,
                            const Eigen::VectorXi &train_labels,
                            const Eigen::MatrixXd &test_features,
                            const Subspace &source, const Subspace &target,
                            const AlignmentMap &map);

}  // namespace zsda

#endif  // ZSDA_CLASSIFY_HPP_
