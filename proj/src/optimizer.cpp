// zsda/optimizer.cpp
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

#include "zsda/optimizer.hpp"

#include <cmath>
#include <string>

#include "zsda/errors.hpp"

namespace zsda {

namespace {

constexpr double kDetSkipTol = 1e-12;

void check_point(const Subspace &p, const WeightedAnchorSet &set) {
  if (set.anchors.empty()) throw InvalidInput("anchor set is empty");
  if (p.ambient_dim() != set.anchors[0].ambient_dim() ||
      p.dim() != set.anchors[0].dim()) {
    throw DimensionMismatch("point does not match anchor shapes");
  }
}

}  // namespace

void validate(const WeightedAnchorSet &set) {
  if (set.anchors.empty()) throw InvalidInput("anchor set is empty");
  if (set.weights.size() != static_cast<Eigen::Index>(set.anchors.size())) {
    throw InvalidInput("anchor/weight count mismatch");
  }
  const int d = set.anchors[0].ambient_dim(), k = set.anchors[0].dim();
  for (const Subspace &a : set.anchors) {
    if (a.ambient_dim() != d || a.dim() != k) {
      throw DimensionMismatch("anchors do not share D and K");
    }
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < set.weights.size(); ++i) {
    if (!(set.weights(i) >= 0.0)) {
      throw InvalidInput("negative or NaN anchor weight");
    }
    sum += set.weights(i);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidInput("anchor weights sum to " + std::to_string(sum) +
                       ", expected 1");
  }
}

nlohmann::ordered_json to_json(const OptimizerTrace &trace) {
  nlohmann::ordered_json j;
  j["objective"] = trace.objective_per_iter;
  j["iterations"] = trace.iterations;
  j["final_grad_norm"] = trace.final_grad_norm;
  j["converged_by"] = trace.converged_by;
  return j;
}

double bc_objective(const Subspace &p, const WeightedAnchorSet &set) {
  check_point(p, set);
  double acc = 0.0;
  for (size_t i = 0; i < set.anchors.size(); ++i) {
    const double det =
        (p.basis.transpose() * set.anchors[i].basis).determinant();
    acc += set.weights(static_cast<Eigen::Index>(i)) * det * det;
  }
  return 1.0 - acc;
}

Eigen::MatrixXd bc_gradient(const Subspace &p, const WeightedAnchorSet &set) {
  check_point(p, set);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p.ambient_dim(), p.dim());
  for (size_t i = 0; i < set.anchors.size(); ++i) {
    const Eigen::MatrixXd m = p.basis.transpose() * set.anchors[i].basis;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const double det = lu.determinant();
    if (std::abs(det) < kDetSkipTol) continue;  // flat region, see header
    const double w = set.weights(static_cast<Eigen::Index>(i));
    // P_i (P^T P_i)^{-1}; the inner matrix is only k-by-k, so an explicit
    // inverse is as cheap as a solve here.
    g.noalias() -= w * det * det * (set.anchors[i].basis * lu.inverse());
  }
  return g;
}

Subspace cayley_step(const Subspace &p, const Eigen::MatrixXd &grad,
                     double eta) {
  if (eta < 0.0) throw InvalidInput("cayley_step: negative step size");
  if (grad.rows() != p.basis.rows() || grad.cols() != p.basis.cols()) {
    throw DimensionMismatch("cayley_step: gradient shape mismatch");
  }
  const Eigen::Index d = p.basis.rows();
  Eigen::MatrixXd a = grad * p.basis.transpose();
  a -= a.transpose().eval();  // A = G P^T - P G^T, skew-symmetric

  const Eigen::MatrixXd lhs =
      Eigen::MatrixXd::Identity(d, d) + (0.5 * eta) * a;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
  if (!(lu.rcond() > 1e-12)) {
    throw SingularUpdate("cayley_step: update system numerically singular");
  }
  const Eigen::MatrixXd rhs =
      Eigen::MatrixXd::Identity(d, d) - (0.5 * eta) * a;
  // Q = lhs^{-1} rhs; apply directly to the basis.
  Eigen::MatrixXd next = lu.solve(rhs * p.basis);
  if (!next.allFinite()) {
    throw SingularUpdate("cayley_step: non-finite update");
  }
  return Subspace{std::move(next)};
}

std::pair<Subspace, OptimizerTrace> minimize_bc(const WeightedAnchorSet &set,
                                                const Subspace &init,
                                                const OptimizerConfig &cfg) {
  validate(set);
  check_point(init, set);
  if (cfg.initial_step <= 0.0 || cfg.max_iters < 1 || cfg.grad_tol <= 0.0 ||
      cfg.obj_rel_tol <= 0.0 || cfg.backtrack_factor <= 0.0 ||
      cfg.backtrack_factor >= 1.0 || cfg.max_backtracks < 0) {
    throw InvalidConfig("minimize_bc: invalid optimizer configuration");
  }

  Subspace p = init;
  double f = bc_objective(p, set);
  OptimizerTrace trace;
  trace.objective_per_iter.push_back(f);
  trace.converged_by = "max_iters";

  const auto skew_norm = [&](const Subspace &q, const Eigen::MatrixXd &g) {
    Eigen::MatrixXd a = g * q.basis.transpose();
    a -= a.transpose().eval();
    return a.norm();
  };

  Eigen::MatrixXd grad;
  for (int it = 0; it < cfg.max_iters; ++it) {
    grad = bc_gradient(p, set);
    const double a_norm = skew_norm(p, grad);
    if (a_norm < cfg.grad_tol) {
      trace.converged_by = "gradient";
      trace.final_grad_norm = a_norm;
      return {std::move(p), std::move(trace)};
    }

    double eta = cfg.initial_step;
    bool accepted = false;
    double f_next = f;
    Subspace cand;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
      try {
        cand = cayley_step(p, grad, eta);
      } catch (const SingularUpdate &) {
        eta *= cfg.backtrack_factor;
        continue;
      }
      f_next = bc_objective(cand, set);
      if (f_next < f) {
        accepted = true;
        break;
      }
      eta *= cfg.backtrack_factor;
    }
    if (!accepted) {
      throw StalledLineSearch(
          "minimize_bc: no decreasing step after " +
          std::to_string(cfg.max_backtracks) + " backtracks (objective " +
          std::to_string(f) + ")");
    }

    const double decrease = f - f_next;
    p = std::move(cand);
    f = f_next;
    trace.objective_per_iter.push_back(f);
    ++trace.iterations;

    if (decrease < cfg.obj_rel_tol * std::max(std::abs(f), 1.0)) {
      trace.converged_by = "objective";
      break;
    }
  }

  trace.final_grad_norm = skew_norm(p, bc_gradient(p, set));
  return {std::move(p), std::move(trace)};
}

}  // namespace zsda
