// zsda/adaptation.hpp
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

#ifndef ZSDA_ADAPTATION_HPP_
#define ZSDA_ADAPTATION_HPP_

#include <optional>
#include <string>

#include <Eigen/Dense>
#include "zsda/grassmann.hpp"

namespace zsda {

// One observed domain: feature rows, optional class labels, the descriptor
// that parametrizes the domain, and an identifier.
struct DomainDataset {
  Eigen::MatrixXd features;              // n x D, rows are samples
  std::optional<Eigen::VectorXi> labels; // length n, non-negative classes
  Eigen::VectorXd descriptor;
  std::string id;
};

// The K x K map M minimizing ||P_S M - P_T||_F^2 (Subspace Alignment).
struct AlignmentMap {
  Eigen::MatrixXd m;
};

// The D x D symmetric PSD kernel integrating projectors along the
// Grassmannian geodesic between two subspaces (Geodesic Flow Kernel).
struct GfkKernel {
  Eigen::MatrixXd g;
};

// Top-k principal directions of the mean-centered features, ordered by
// decreasing variance, computed through the SVD of the centered data matrix
// (stable for D >> n; the covariance eigendecomposition survives only as a
// test oracle).  Column signs follow the largest-magnitude-entry-positive
// convention.  Throws InsufficientSamples when k > min(D, n - 1) and
// DegenerateVariance when the k-th singular value is below 1e-12.
Subspace learn_subspace(const DomainDataset &data, int k);

// Closed-form Subspace Alignment map M* = P_S^T P_T.  Throws
// DimensionMismatch.
AlignmentMap subspace_alignment(const Subspace &source,
                                const Subspace &target);

// Geodesic from `source` toward `target` on G(K, D), diagonalized through
// the principal angles:
//   Phi(t) = P_S U1 cos(t Theta) + R_S U2 sin(t Theta),
// with Phi(0) = P_S, Phi(1) spanning the target, and R_S a deterministic
// orthonormal complement of the source.  Exposed so the flow kernel's
// closed form can be cross-checked against numerical integration of
// Phi(t) Phi(t)^T.  Requires 2K < D (ComplementUnavailable otherwise).
struct GfkGeodesic {
  Eigen::MatrixXd ps_u1;  // D x K, P_S U1
  Eigen::MatrixXd rs_u2;  // D x K, R_S U2 (columns zeroed where theta ~ 0)
  Eigen::VectorXd theta;  // K principal angles, ascending

  Eigen::MatrixXd at(double t) const;  // Phi(t), D x K
};

GfkGeodesic gfk_geodesic(const Subspace &source, const Subspace &target);

// Closed-form G = integral_0^1 Phi(t) Phi(t)^T dt, assembled from the
// principal angles; symmetric PSD.  Removable singularities at theta = 0
// are handled by series expansion below 1e-6.  Throws DimensionMismatch and
// ComplementUnavailable (2K >= D).
GfkKernel gfk_kernel(const Subspace &source, const Subspace &target);

}  // namespace zsda

#endif  // ZSDA_ADAPTATION_HPP_
