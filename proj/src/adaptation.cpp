// zsda/adaptation.cpp
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

#include "zsda/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zsda/errors.hpp"

namespace zsda {

namespace {

constexpr double kSmallAngle = 1e-6;  // series-expansion threshold

void fix_column_signs(Eigen::MatrixXd *m) {
  for (Eigen::Index j = 0; j < m->cols(); ++j) {
    Eigen::Index imax = 0;
    m->col(j).cwiseAbs().maxCoeff(&imax);
    if ((*m)(imax, j) < 0.0) m->col(j) = -m->col(j);
  }
}

}  // namespace

Subspace learn_subspace(const DomainDataset &data, int k) {
  const Eigen::Index n = data.features.rows(), d = data.features.cols();
  if (k < 1) throw InvalidInput("learn_subspace: k must be >= 1");
  if (n < 2 || k > std::min<Eigen::Index>(d, n - 1)) {
    throw InsufficientSamples(
        "learn_subspace: k = " + std::to_string(k) + " exceeds min(D, n-1) = " +
        std::to_string(std::min<Eigen::Index>(d, n - 1)) + " (n = " +
        std::to_string(n) + ", D = " + std::to_string(d) + ")");
  }
  Eigen::MatrixXd centered =
      data.features.rowwise() - data.features.colwise().mean();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  if (svd.singularValues()(k - 1) < 1e-12) {
    throw DegenerateVariance("learn_subspace: data rank below " +
                             std::to_string(k));
  }
  Eigen::MatrixXd basis = svd.matrixV().leftCols(k);
  fix_column_signs(&basis);
  return Subspace{std::move(basis)};
}

AlignmentMap subspace_alignment(const Subspace &source,
                                const Subspace &target) {
  if (source.ambient_dim() != target.ambient_dim() ||
      source.dim() != target.dim()) {
    throw DimensionMismatch("subspace_alignment: shape mismatch");
  }
  return AlignmentMap{source.basis.transpose() * target.basis};
}

Eigen::MatrixXd GfkGeodesic::at(double t) const {
  const Eigen::Index k = theta.size();
  Eigen::MatrixXd phi(ps_u1.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) {
    phi.col(j) = ps_u1.col(j) * std::cos(t * theta(j)) +
                 rs_u2.col(j) * std::sin(t * theta(j));
  }
  return phi;
}

GfkGeodesic gfk_geodesic(const Subspace &source, const Subspace &target) {
  if (source.ambient_dim() != target.ambient_dim() ||
      source.dim() != target.dim()) {
    throw DimensionMismatch("gfk_geodesic: shape mismatch");
  }
  const Eigen::Index d = source.ambient_dim(), k = source.dim();
  if (2 * k >= d) {
    throw ComplementUnavailable(
        "gfk_geodesic: need 2K < D for the source complement (K = " +
        std::to_string(k) + ", D = " + std::to_string(d) + ")");
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      source.basis.transpose() * target.basis,
      Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd theta(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    theta(j) = std::acos(std::clamp(svd.singularValues()(j), 0.0, 1.0));
  }
  // Descending singular values mean ascending angles already.

  // Orthonormal complement of the source: the trailing D-K columns of the
  // full Householder Q factor.  Any other complement differs by an
  // orthogonal mixing that cancels in R_S U2.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(source.basis);
  const Eigen::MatrixXd q_full =
      qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd rs = q_full.rightCols(d - k);

  // U2 = R_S^T P_T V diag(sin theta)^{-1}; a zero angle makes the column
  // arbitrary and its sin(t theta) coefficient identically zero, so zero it.
  const Eigen::MatrixXd b = rs.transpose() * (target.basis * svd.matrixV());
  Eigen::MatrixXd u2 = Eigen::MatrixXd::Zero(d - k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double s = std::sin(theta(j));
    if (theta(j) >= kSmallAngle) u2.col(j) = b.col(j) / s;
  }

  GfkGeodesic geo;
  geo.ps_u1 = source.basis * svd.matrixU();
  geo.rs_u2 = rs * u2;
  geo.theta = std::move(theta);
  return geo;
}

GfkKernel gfk_kernel(const Subspace &source, const Subspace &target) {
  const GfkGeodesic geo = gfk_geodesic(source, target);
  const Eigen::Index k = geo.theta.size();

  // Diagonal integrals of the projector along the flow:
  //   lam1 = int cos^2(t th) dt,  lam12 = int cos(t th) sin(t th) dt,
  //   lam2 = int sin^2(t th) dt,
  // with series expansions where the closed forms are 0/0.
  Eigen::VectorXd lam1(k), lam12(k), lam2(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double th = geo.theta(j);
    if (th < kSmallAngle) {
      lam1(j) = 1.0 - th * th / 3.0;
      lam12(j) = 0.5 * th;
      lam2(j) = th * th / 3.0;
    } else {
      lam1(j) = 0.5 + std::sin(2.0 * th) / (4.0 * th);
      lam12(j) = (1.0 - std::cos(2.0 * th)) / (4.0 * th);
      lam2(j) = 0.5 - std::sin(2.0 * th) / (4.0 * th);
    }
  }

  Eigen::MatrixXd g = geo.ps_u1 * lam1.asDiagonal() * geo.ps_u1.transpose() +
                      geo.ps_u1 * lam12.asDiagonal() * geo.rs_u2.transpose() +
                      geo.rs_u2 * lam12.asDiagonal() * geo.ps_u1.transpose() +
                      geo.rs_u2 * lam2.asDiagonal() * geo.rs_u2.transpose();
  g = 0.5 * (g + g.transpose()).eval();  // exact symmetry for downstream checks
  return GfkKernel{std::move(g)};
}

}  // namespace zsda
