// zsda/grassmann.cpp
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

#include "zsda/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zsda/errors.hpp"

namespace zsda {

namespace {

constexpr double kRankTol = 1e-10;   // relative singular-value cutoff
constexpr double kDetTol = 1e-12;    // Martin divergence threshold

void check_same_manifold(const Subspace &p1, const Subspace &p2) {
  if (p1.ambient_dim() != p2.ambient_dim() || p1.dim() != p2.dim()) {
    throw DimensionMismatch(
        "subspaces live on different Grassmannians: G(" +
        std::to_string(p1.dim()) + "," + std::to_string(p1.ambient_dim()) +
        ") vs G(" + std::to_string(p2.dim()) + "," +
        std::to_string(p2.ambient_dim()) + ")");
  }
}

// Flips column signs so the largest-magnitude entry of each column is
// positive.  Ties on magnitude resolve to the lowest row index, which keeps
// the convention deterministic.
void fix_column_signs(Eigen::MatrixXd *m) {
  for (Eigen::Index j = 0; j < m->cols(); ++j) {
    Eigen::Index imax = 0;
    m->col(j).cwiseAbs().maxCoeff(&imax);
    if ((*m)(imax, j) < 0.0) m->col(j) = -m->col(j);
  }
}

}  // namespace

Subspace make_subspace(const Eigen::MatrixXd &raw) {
  const Eigen::Index d = raw.rows(), k = raw.cols();
  if (d < 1 || k < 1) throw InvalidInput("make_subspace: empty basis matrix");
  if (k > d) {
    throw InvalidInput("make_subspace: more columns (" + std::to_string(k) +
                       ") than ambient dimensions (" + std::to_string(d) +
                       ")");
  }
  if (!raw.allFinite()) {
    throw InvalidInput("make_subspace: basis contains non-finite entries");
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(raw);
  const Eigen::VectorXd &sv = svd.singularValues();
  if (sv(k - 1) < kRankTol * sv(0)) {
    throw RankDeficient("make_subspace: numerical rank below " +
                        std::to_string(k) + " (sigma_min/sigma_max = " +
                        std::to_string(sv(k - 1) / sv(0)) + ")");
  }

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
  Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(d, k);
  fix_column_signs(&q);
  return Subspace{std::move(q)};
}

PrincipalAngles principal_angles(const Subspace &p1, const Subspace &p2) {
  check_same_manifold(p1, p2);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p1.basis.transpose() * p2.basis);
  Eigen::VectorXd sigma = svd.singularValues();
  // Singular values come out descending, so the arccos images are already
  // ascending; clamping guards against 1 + epsilon overshoot.
  Eigen::VectorXd theta(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    theta(i) = std::acos(std::clamp(sigma(i), 0.0, 1.0));
  }
  return PrincipalAngles{std::move(theta)};
}

double distance(const Subspace &p1, const Subspace &p2, DistanceKind kind,
                DistanceForm form) {
  check_same_manifold(p1, p2);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  if (form == DistanceForm::kAngles) {
    const Eigen::VectorXd theta = principal_angles(p1, p2).angles;
    switch (kind) {
      case DistanceKind::kBinetCauchy: {
        double prod = 1.0;
        for (Eigen::Index i = 0; i < theta.size(); ++i) {
          const double c = std::cos(theta(i));
          prod *= c * c;
        }
        return 1.0 - prod;
      }
      case DistanceKind::kChordal: {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < theta.size(); ++i) {
          const double s = std::sin(theta(i));
          sum += s * s;
        }
        return sum;
      }
      case DistanceKind::kMartin: {
        double prod_cos = 1.0;
        for (Eigen::Index i = 0; i < theta.size(); ++i) {
          prod_cos *= std::cos(theta(i));
        }
        if (prod_cos < kDetTol) return kInf;
        double sum = 0.0;
        for (Eigen::Index i = 0; i < theta.size(); ++i) {
          const double c = std::cos(theta(i));
          sum -= std::log(c * c);
        }
        return sum;
      }
      case DistanceKind::kProcrustes: {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < theta.size(); ++i) {
          const double s = std::sin(0.5 * theta(i));
          sum += s * s;
        }
        return 4.0 * sum;
      }
    }
  } else {
    const Eigen::MatrixXd m = p1.basis.transpose() * p2.basis;
    switch (kind) {
      case DistanceKind::kBinetCauchy: {
        const double det = m.determinant();
        return 1.0 - det * det;
      }
      case DistanceKind::kChordal: {
        const Eigen::MatrixXd diff = p1.basis * p1.basis.transpose() -
                                     p2.basis * p2.basis.transpose();
        return 0.5 * diff.squaredNorm();
      }
      case DistanceKind::kMartin: {
        const double abs_det = std::abs(m.determinant());
        if (abs_det < kDetTol) return kInf;
        return -2.0 * std::log(abs_det);
      }
      case DistanceKind::kProcrustes: {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(
            m, Eigen::ComputeFullU | Eigen::ComputeFullV);
        return (p1.basis * svd.matrixU() - p2.basis * svd.matrixV())
            .squaredNorm();
      }
    }
  }
  throw InvalidInput("distance: unknown kind/form combination");
}

}  // namespace zsda
