// zsda/grassmann.hpp
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

#ifndef ZSDA_GRASSMANN_HPP_
#define ZSDA_GRASSMANN_HPP_

#include <Eigen/Dense>

namespace zsda {

// A point on the Grassmann manifold G(K, D): a K-dimensional linear subspace
// of R^D, represented (non-uniquely) by a D x K matrix with orthonormal
// columns.  All operations treat two bases spanning the same subspace as the
// same point.
struct Subspace {
  Eigen::MatrixXd basis;  // D x K, basis^T * basis = I_K within 1e-10

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
};

// Canonical angles between two subspaces, sorted ascending, each in
// [0, pi/2].  Obtained from the singular values of P1^T P2.
struct PrincipalAngles {
  Eigen::VectorXd angles;
};

enum class DistanceKind {
  kBinetCauchy,  // 1 - prod cos^2(theta)      = 1 - det(P1^T P2)^2
  kChordal,      // sum sin^2(theta)           = 1/2 ||P1 P1^T - P2 P2^T||_F^2
  kMartin,       // -sum log cos^2(theta)      = -2 log |det(P1^T P2)|
  kProcrustes,   // 4 sum sin^2(theta/2)       = ||P1 U - P2 V||_F^2
};

enum class DistanceForm {
  kAngles,  // evaluate through the principal angles
  kBases,   // evaluate directly on the orthonormal bases
};

// Orthonormalizes the columns of `raw` into a Subspace spanning the same
// space.  Deterministic: the largest-magnitude entry of every output column
// is made positive, so the same input always yields the same basis and an
// already-orthonormal input (up to column signs) is preserved.
//
// Throws RankDeficient when the numerical rank of `raw` is below its column
// count (smallest singular value < 1e-10 x largest), InvalidInput on empty
// or over-wide input.
Subspace make_subspace(const Eigen::MatrixXd &raw);

// Principal angles theta_k = arccos(sigma_k) of the singular values of
// p1.basis^T * p2.basis, with each sigma clamped to [0, 1] before arccos so
// floating-point overshoot cannot produce NaN.  Throws DimensionMismatch.
PrincipalAngles principal_angles(const Subspace &p1, const Subspace &p2);

// Squared subspace distance of the selected kind, evaluated either through
// the principal angles or directly on the bases.  The two forms agree within
// 1e-8 relative.  The Martin distance diverges when P1^T P2 is singular; it
// returns +infinity once |det| (equivalently prod cos(theta)) drops below
// 1e-12 rather than erroring.  Throws DimensionMismatch.
double distance(const Subspace &p1, const Subspace &p2, DistanceKind kind,
                DistanceForm form);

}  // namespace zsda

#endif  // ZSDA_GRASSMANN_HPP_
