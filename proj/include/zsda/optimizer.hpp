// zsda/optimizer.hpp
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

#ifndef ZSDA_OPTIMIZER_HPP_
#define ZSDA_OPTIMIZER_HPP_

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"
#include "zsda/grassmann.hpp"

namespace zsda {

// Anchors P_i with convex weights w_i defining the weighted Binet-Cauchy
// objective f(P) = 1 - sum_i w_i det(P^T P_i)^2, the Frechet-mean problem
// the subspace predictor minimizes.
struct WeightedAnchorSet {
  std::vector<Subspace> anchors;  // shared D and K
  Eigen::VectorXd weights;        // non-negative, sums to 1 within 1e-12
};

// Validates the anchor-set invariants (consistent shapes, convex weights).
// Throws InvalidInput / DimensionMismatch.
void validate(const WeightedAnchorSet &set);

struct OptimizerConfig {
  double initial_step = 1.0;     // eta, halved by the line search
  int max_iters = 500;
  double grad_tol = 1e-6;        // on ||A||_F, A the skew update generator
  double obj_rel_tol = 1e-9;     // relative per-step objective decrease
  double backtrack_factor = 0.5;
  int max_backtracks = 30;
};

struct OptimizerTrace {
  // objective_per_iter[0] is the objective at the initial point; one entry
  // per accepted step afterwards.  Non-increasing by construction (the line
  // search only accepts strict decrease).
  std::vector<double> objective_per_iter;
  double final_grad_norm = 0.0;  // ||A||_F at the returned point
  int iterations = 0;            // number of accepted steps
  std::string converged_by;      // "gradient" | "objective" | "max_iters"
};

// {"objective": [...], "iterations": n, "final_grad_norm": x,
//  "converged_by": "gradient"}
nlohmann::ordered_json to_json(const OptimizerTrace &trace);

// f(P) = 1 - sum_i w_i det(P^T P_i)^2.  Always in [0, 1] for orthonormal
// bases and convex weights.  Throws DimensionMismatch.
double bc_objective(const Subspace &p, const WeightedAnchorSet &set);

// Euclidean (ambient) gradient of bc_objective as the update scheme uses it:
//   G = - sum_i w_i det(P^T P_i)^2 P_i (P^T P_i)^{-1}.
// Anchor terms with |det(P^T P_i)| < 1e-12 are skipped; their contribution
// is O(det^2) and numerically unreliable through the inverse.  Throws
// DimensionMismatch.
Eigen::MatrixXd bc_gradient(const Subspace &p, const WeightedAnchorSet &set);

// One feasibility-preserving descent step: with A = G P^T - P G^T (skew),
//   Q = (I + eta/2 A)^{-1} (I - eta/2 A),   P <- Q P.
// Q is orthogonal for any skew A, so column orthonormality is preserved to
// machine precision.  Computed by a linear solve, never an explicit inverse.
// Throws SingularUpdate when the system is numerically singular (condition
// estimate > 1e12, which for finite inputs cannot happen: I + eta/2 A has
// all singular values >= 1) and InvalidInput for eta < 0 or shape mismatch.
Subspace cayley_step(const Subspace &p, const Eigen::MatrixXd &grad,
                     double eta);

// Gradient descent on the weighted BC objective with backtracking line
// search.  Starts at `init`, accepts only strictly decreasing steps, and
// stops when ||A||_F < grad_tol, the relative objective decrease falls below
// obj_rel_tol, or max_iters is reached.  Returns the final feasible point
// and the trace of the path.  Throws StalledLineSearch when max_backtracks
// halvings of eta never produce a decrease.
std::pair<Subspace, OptimizerTrace> minimize_bc(const WeightedAnchorSet &set,
                                                const Subspace &init,
                                                const OptimizerConfig &cfg);

}  // namespace zsda

#endif  // ZSDA_OPTIMIZER_HPP_
