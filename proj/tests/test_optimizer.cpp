// tests/test_optimizer.cpp
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "test_util.hpp"
#include "zsda/errors.hpp"
#include "zsda/grassmann.hpp"
#include "zsda/optimizer.hpp"

using namespace zsda;

namespace {

Subspace line2d(double angle) {
  Eigen::MatrixXd b(2, 1);
  b << std::cos(angle), std::sin(angle);
  Subspace p;
  p.basis = b;  // already unit-norm; keep the exact direction
  return p;
}

WeightedAnchorSet single_anchor(const Subspace &p) {
  WeightedAnchorSet set;
  set.anchors = {p};
  set.weights = Eigen::VectorXd::Ones(1);
  return set;
}

// The two-line Frechet problem of the f(phi) = 0.5 sin^2(phi) +
// 0.5 sin^2(phi - gap) family, solved by brute-force grid search.
double grid_search_two_lines(double gap, double resolution) {
  double best_phi = 0.0, best_f = 1e300;
  for (double phi = 0.0; phi <= gap; phi += resolution) {
    const double f =
        0.5 * std::sin(phi) * std::sin(phi) +
        0.5 * std::sin(phi - gap) * std::sin(phi - gap);
    if (f < best_f) {
      best_f = f;
      best_phi = phi;
    }
  }
  return best_phi;
}

// Directional derivative of bc_objective by central differences along an
// ambient direction; bc_objective only needs matching shapes, so the probe
// points P +- h*delta can be evaluated directly.
double fd_directional(const Subspace &p, const WeightedAnchorSet &set,
                      const Eigen::MatrixXd &delta, double h) {
  Subspace plus = p, minus = p;
  plus.basis += h * delta;
  minus.basis -= h * delta;
  return (bc_objective(plus, set) - bc_objective(minus, set)) / (2.0 * h);
}

// The gradient formula is implemented exactly as printed, which carries half
// the scale of the calculus gradient of det^2; the finite-difference oracle
// bakes the factor 2 in and projects both sides onto the tangent space at p.
void check_gradient_fd(std::mt19937_64 &rng, int d, int k, int n_anchors) {
  WeightedAnchorSet set;
  for (int i = 0; i < n_anchors; ++i) {
    set.anchors.push_back(test::random_subspace(rng, d, k));
  }
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n_anchors);
  for (int i = 0; i < n_anchors; ++i) w(i) = 0.5 + i;
  set.weights = w / w.sum();

  const Subspace p = test::random_subspace(rng, d, k);
  const Eigen::MatrixXd grad = bc_gradient(p, set);
  const Eigen::MatrixXd tangent_grad =
      grad - p.basis * (p.basis.transpose() * grad);

  for (int t = 0; t < 10; ++t) {
    Eigen::MatrixXd delta = test::random_matrix(rng, d, k);
    delta -= p.basis * (p.basis.transpose() * delta);  // tangent component
    delta /= delta.norm();
    const double analytic = 2.0 * (tangent_grad.array() * delta.array()).sum();
    const double numeric = fd_directional(p, set, delta, 1e-6);
    const double scale = std::max({1.0, std::abs(analytic)});
    CHECK(std::abs(analytic - numeric) < 1e-5 * scale);
  }
}

}  // namespace

TEST_CASE("validate accepts a proper anchor set") {
  std::mt19937_64 rng(30);
  WeightedAnchorSet set;
  set.anchors = {test::random_subspace(rng, 6, 2),
                 test::random_subspace(rng, 6, 2)};
  set.weights = Eigen::Vector2d(0.25, 0.75);
  CHECK_NOTHROW(validate(set));
}

TEST_CASE("validate rejects bad weights and ragged anchors") {
  std::mt19937_64 rng(31);
  WeightedAnchorSet set;
  set.anchors = {test::random_subspace(rng, 6, 2),
                 test::random_subspace(rng, 6, 2)};
  set.weights = Eigen::Vector2d(0.5, 0.6);
  CHECK_THROWS_AS(validate(set), InvalidInput);
  set.weights = Eigen::Vector2d(-0.1, 1.1);
  CHECK_THROWS_AS(validate(set), InvalidInput);
  set.weights = Eigen::Vector2d(0.5, 0.5);
  set.anchors[1] = test::random_subspace(rng, 7, 2);
  CHECK_THROWS_AS(validate(set), DimensionMismatch);
}

TEST_CASE("bc_objective is zero at a lone anchor") {
  std::mt19937_64 rng(32);
  const Subspace p = test::random_subspace(rng, 5, 2);
  CHECK(bc_objective(p, single_anchor(p)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bc_objective is one for orthogonal lines") {
  CHECK(bc_objective(line2d(M_PI / 2), single_anchor(line2d(0.0))) ==
        doctest::Approx(1.0));
}

TEST_CASE("bc_objective matches the two-anchor hand value") {
  WeightedAnchorSet set;
  set.anchors = {line2d(0.0), line2d(0.6)};
  set.weights = Eigen::Vector2d(0.5, 0.5);
  const double got = bc_objective(line2d(0.3), set);
  const double want = std::sin(0.3) * std::sin(0.3);
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
  CHECK(got == doctest::Approx(0.0873322).epsilon(1e-5));
}

TEST_CASE("bc_objective stays within [0, 1]") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 20; ++t) {
    WeightedAnchorSet set;
    set.anchors = {test::random_subspace(rng, 8, 3),
                   test::random_subspace(rng, 8, 3),
                   test::random_subspace(rng, 8, 3)};
    set.weights = Eigen::Vector3d(0.2, 0.3, 0.5);
    const double f = bc_objective(test::random_subspace(rng, 8, 3), set);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("bc_gradient at a lone anchor is -P with zero skew part") {
  std::mt19937_64 rng(34);
  const Subspace p = test::random_subspace(rng, 6, 2);
  const Eigen::MatrixXd g = bc_gradient(p, single_anchor(p));
  CHECK((g + p.basis).norm() < 1e-10);
  const Eigen::MatrixXd a =
      g * p.basis.transpose() - p.basis * g.transpose();
  CHECK(a.norm() < 1e-10);
}

TEST_CASE("bc_gradient vanishes when every anchor is orthogonal") {
  WeightedAnchorSet set = single_anchor(line2d(0.0));
  const Eigen::MatrixXd g = bc_gradient(line2d(M_PI / 2), set);
  CHECK(g.norm() == 0.0);
}

TEST_CASE("bc_gradient matches finite differences on G(2,6) and G(3,8)") {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 20; ++t) check_gradient_fd(rng, 6, 2, 3);
  for (int t = 0; t < 20; ++t) check_gradient_fd(rng, 8, 3, 4);
}

TEST_CASE("cayley_step with zero gradient or zero step is the identity") {
  std::mt19937_64 rng(36);
  const Subspace p = test::random_subspace(rng, 7, 3);
  const Subspace q1 =
      cayley_step(p, Eigen::MatrixXd::Zero(7, 3), 0.5);
  CHECK((q1.basis - p.basis).norm() < 1e-14);
  const Eigen::MatrixXd g = test::random_matrix(rng, 7, 3);
  const Subspace q2 = cayley_step(p, g, 0.0);
  CHECK((q2.basis - p.basis).norm() < 1e-14);
}

TEST_CASE("cayley_step reproduces the hand-computed 2x2 rotation") {
  // p = e1, A = [[0,-1],[1,0]], eta = 2:
  //   Q = (I + A)^-1 (I - A) = [[0,1],[-1,0]], so Q p = (0,-1)^T.
  // A = g p^T - p g^T with p = e1 wants g = (0,1)^T... g p^T = [[0,0],[1,0]],
  // p g^T = [[0,1],[0,0]], difference [[0,-1],[1,0]].  Matches.
  Subspace p;
  p.basis = Eigen::MatrixXd(2, 1);
  p.basis << 1.0, 0.0;
  Eigen::MatrixXd g(2, 1);
  g << 0.0, 1.0;
  const Subspace q = cayley_step(p, g, 2.0);
  CHECK(q.basis(0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q.basis(1, 0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("cayley_step preserves orthonormality over 1000 random trials") {
  std::mt19937_64 rng(37);
  const double etas[] = {0.01, 0.1, 1.0};
  for (int t = 0; t < 1000; ++t) {
    const Subspace p = test::random_subspace(rng, 12, 4);
    const Eigen::MatrixXd g = test::random_matrix(rng, 12, 4);
    const Subspace q = cayley_step(p, g, etas[t % 3]);
    CHECK((q.basis.transpose() * q.basis -
           Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-10);
  }
}

TEST_CASE("the cayley rotation itself is orthogonal") {
  // Recover Q by applying the step to every column of I via K = D basis.
  std::mt19937_64 rng(38);
  for (double eta : {0.01, 0.1, 1.0}) {
    Subspace eye;
    eye.basis = Eigen::MatrixXd::Identity(5, 5);
    const Eigen::MatrixXd g = test::random_matrix(rng, 5, 5);
    const Subspace q = cayley_step(eye, g, eta);
    CHECK((q.basis * q.basis.transpose() -
           Eigen::MatrixXd::Identity(5, 5)).norm() < 1e-10);
  }
}

TEST_CASE("minimize_bc at a lone anchor stops immediately") {
  std::mt19937_64 rng(39);
  const Subspace p = test::random_subspace(rng, 6, 2);
  const auto [result, trace] = minimize_bc(single_anchor(p), p, {});
  CHECK(bc_objective(result, single_anchor(p)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(trace.iterations <= 1);
  CHECK(trace.converged_by == "gradient");
}

TEST_CASE("minimize_bc recovers a shared anchor from a tilted start") {
  std::mt19937_64 rng(40);
  const Subspace star = test::random_subspace(rng, 6, 2);
  WeightedAnchorSet set;
  set.anchors = {star, star, star};
  set.weights = Eigen::Vector3d(0.2, 0.5, 0.3);

  // A start with det(init^T star) != 0: blend and re-orthonormalize.
  Eigen::MatrixXd raw = star.basis + 0.4 * test::random_matrix(rng, 6, 2);
  const Subspace init = make_subspace(raw);
  REQUIRE(std::abs((init.basis.transpose() * star.basis).determinant()) >
          1e-3);

  const auto [result, trace] = minimize_bc(set, init, {});
  CHECK(distance(result, star, DistanceKind::kBinetCauchy,
                 DistanceForm::kAngles) < 1e-8);
}

TEST_CASE("minimize_bc matches the two-line grid-search oracle") {
  WeightedAnchorSet set;
  set.anchors = {line2d(0.0), line2d(0.6)};
  set.weights = Eigen::Vector2d(0.5, 0.5);
  const auto [result, trace] = minimize_bc(set, line2d(0.0), {});

  const double got_angle =
      std::atan2(std::abs(result.basis(1, 0)), std::abs(result.basis(0, 0)));
  const double want_angle = grid_search_two_lines(0.6, 1e-5);
  CHECK(std::abs(want_angle - 0.3) < 2e-5);  // oracle sanity
  CHECK(std::abs(got_angle - want_angle) < 1e-4);

  for (size_t i = 1; i < trace.objective_per_iter.size(); ++i) {
    CHECK(trace.objective_per_iter[i] <= trace.objective_per_iter[i - 1]);
  }
}

TEST_CASE("minimize_bc trace is monotone on random problems") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 5; ++t) {
    WeightedAnchorSet set;
    Eigen::VectorXd w(4);
    for (int i = 0; i < 4; ++i) {
      set.anchors.push_back(test::random_subspace(rng, 10, 3));
      w(i) = 1.0 + i;
    }
    set.weights = w / w.sum();
    const auto [result, trace] = minimize_bc(set, set.anchors[0], {});
    REQUIRE(!trace.objective_per_iter.empty());
    CHECK(trace.objective_per_iter.front() ==
          doctest::Approx(bc_objective(set.anchors[0], set)));
    for (size_t i = 1; i < trace.objective_per_iter.size(); ++i) {
      CHECK(trace.objective_per_iter[i] <= trace.objective_per_iter[i - 1]);
    }
    CHECK(bc_objective(result, set) <= bc_objective(set.anchors[0], set));
    CHECK((trace.converged_by == "gradient" ||
           trace.converged_by == "objective" ||
           trace.converged_by == "max_iters"));
  }
}

TEST_CASE("optimizer trace serializes with the documented keys") {
  std::mt19937_64 rng(42);
  const Subspace p = test::random_subspace(rng, 5, 2);
  const auto [result, trace] = minimize_bc(single_anchor(p), p, {});
  const nlohmann::ordered_json j = to_json(trace);
  CHECK(j.contains("objective"));
  CHECK(j.contains("iterations"));
  CHECK(j.contains("final_grad_norm"));
  CHECK(j.contains("converged_by"));
  CHECK(j["objective"].is_array());
  CHECK(j["iterations"].get<int>() == trace.iterations);
}

TEST_CASE("minimize_bc respects max_iters") {
  std::mt19937_64 rng(43);
  WeightedAnchorSet set;
  Eigen::VectorXd w(3);
  for (int i = 0; i < 3; ++i) {
    set.anchors.push_back(test::random_subspace(rng, 12, 4));
    w(i) = 1.0;
  }
  set.weights = w / w.sum();
  OptimizerConfig cfg;
  cfg.max_iters = 2;
  const auto [result, trace] = minimize_bc(set, set.anchors[0], cfg);
  CHECK(trace.iterations <= 2);
}
