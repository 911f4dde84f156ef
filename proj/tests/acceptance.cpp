// tests/acceptance.cpp
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

// End-to-end acceptance harness.  Each numbered criterion prints exactly one
// [PASS]/[FAIL] line with its measured values and elapsed time; the process
// exits non-zero if any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zsda/adaptation.hpp"
#include "zsda/classify.hpp"
#include "zsda/dataset.hpp"
#include "zsda/errors.hpp"
#include "zsda/grassmann.hpp"
#include "zsda/io.hpp"
#include "zsda/optimizer.hpp"
#include "zsda/pipeline.hpp"
#include "zsda/regression.hpp"
#include "zsda/synthetic.hpp"

using namespace zsda;

namespace {

// ---- helpers ---------------------------------------------------------------

Eigen::MatrixXd random_matrix(std::mt19937_64 &rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  return m;
}

Subspace random_subspace(std::mt19937_64 &rng, int d, int k) {
  return make_subspace(random_matrix(rng, d, k));
}

Subspace line2d(double angle) {
  Subspace p;
  p.basis = Eigen::MatrixXd(2, 1);
  p.basis << std::cos(angle), std::sin(angle);
  return p;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool run_criterion(int id, const std::string &label, double limit_seconds,
                   const std::function<Outcome()> &fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = fn();
  } catch (const std::exception &e) {
    outcome.pass = false;
    outcome.detail = std::string("threw ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool in_time = limit_seconds <= 0.0 || elapsed < limit_seconds;
  const bool pass = outcome.pass && in_time;

  std::ostringstream line;
  line << (pass ? "[PASS]" : "[FAIL]") << " " << id << ". " << label << ": "
       << outcome.detail << " (" << std::fixed;
  line.precision(2);
  line << elapsed << " s";
  if (limit_seconds > 0.0) {
    line << (in_time ? " < " : " EXCEEDS ") << limit_seconds << " s limit";
  }
  line << ")";
  std::puts(line.str().c_str());
  return pass;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

// ---- criteria 1-7: property checks ------------------------------------------

Outcome dual_form_agreement() {
  std::mt19937_64 rng(1001);
  constexpr DistanceKind kinds[] = {
      DistanceKind::kBinetCauchy, DistanceKind::kChordal,
      DistanceKind::kMartin, DistanceKind::kProcrustes};
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Subspace p1 = random_subspace(rng, 20, 5);
    const Subspace p2 = random_subspace(rng, 20, 5);
    const double det = (p1.basis.transpose() * p2.basis).determinant();
    for (DistanceKind kind : kinds) {
      if (kind == DistanceKind::kMartin && std::abs(det) < 1e-12) continue;
      const double a = distance(p1, p2, kind, DistanceForm::kAngles);
      const double b = distance(p1, p2, kind, DistanceForm::kBases);
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  return {worst < 1e-8,
          "max relative form deviation " + fmt(worst) + " over 100 pairs"};
}

Outcome cayley_feasibility() {
  std::mt19937_64 rng(1002);
  const double etas[] = {0.01, 0.1, 1.0};
  double worst_point = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Subspace p = random_subspace(rng, 12, 4);
    const Eigen::MatrixXd g = random_matrix(rng, 12, 4);
    const Subspace q = cayley_step(p, g, etas[t % 3]);
    worst_point = std::max(
        worst_point, (q.basis.transpose() * q.basis -
                      Eigen::MatrixXd::Identity(4, 4)).norm());
  }
  // Recover Q itself by stepping the identity basis (K = D): the output IS
  // the rotation, so its Gram deviation measures ||Q^T Q - I||_F.
  double worst_q = 0.0;
  for (int t = 0; t < 100; ++t) {
    Subspace eye;
    eye.basis = Eigen::MatrixXd::Identity(12, 12);
    const Subspace q = cayley_step(eye, random_matrix(rng, 12, 12),
                                   etas[t % 3]);
    worst_q = std::max(worst_q, (q.basis.transpose() * q.basis -
                                 Eigen::MatrixXd::Identity(12, 12)).norm());
  }
  return {worst_point < 1e-10 && worst_q < 1e-10,
          "max ||P^T P - I|| " + fmt(worst_point) + " over 1000 steps, max "
          "||Q^T Q - I|| " + fmt(worst_q) + " over 100 rotations"};
}

Outcome gradient_check() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  const auto check_instance = [&](int d, int k) {
    WeightedAnchorSet set;
    Eigen::VectorXd w(3);
    for (int i = 0; i < 3; ++i) {
      set.anchors.push_back(random_subspace(rng, d, k));
      w(i) = 1.0 + i;
    }
    set.weights = w / w.sum();
    const Subspace p = random_subspace(rng, d, k);
    const Eigen::MatrixXd grad = bc_gradient(p, set);
    const Eigen::MatrixXd tangent_grad =
        grad - p.basis * (p.basis.transpose() * grad);
    for (int t = 0; t < 10; ++t) {
      Eigen::MatrixXd delta = random_matrix(rng, d, k);
      delta -= p.basis * (p.basis.transpose() * delta);
      delta /= delta.norm();
      // The implemented gradient follows the printed formula, which is half
      // the calculus gradient of det^2; the oracle carries the factor 2.
      const double analytic =
          2.0 * (tangent_grad.array() * delta.array()).sum();
      const double h = 1e-6;
      Subspace plus = p, minus = p;
      plus.basis += h * delta;
      minus.basis -= h * delta;
      const double numeric =
          (bc_objective(plus, set) - bc_objective(minus, set)) / (2.0 * h);
      worst = std::max(worst, std::abs(analytic - numeric) /
                                  std::max(1.0, std::abs(analytic)));
    }
  };
  for (int t = 0; t < 10; ++t) check_instance(6, 2);
  for (int t = 0; t < 10; ++t) check_instance(8, 3);
  return {worst < 1e-5,
          "max relative FD deviation " + fmt(worst) +
              " over 20 instances x 10 directions"};
}

Outcome frechet_oracle() {
  WeightedAnchorSet set;
  set.anchors = {line2d(0.0), line2d(0.6)};
  set.weights = Eigen::Vector2d(0.5, 0.5);
  const auto [result, trace] = minimize_bc(set, line2d(0.0), {});
  const double got =
      std::atan2(std::abs(result.basis(1, 0)), std::abs(result.basis(0, 0)));

  double best_phi = 0.0, best_f = 1e300;
  for (double phi = 0.0; phi <= 0.6; phi += 1e-5) {
    const double f = 0.5 * std::sin(phi) * std::sin(phi) +
                     0.5 * std::sin(phi - 0.6) * std::sin(phi - 0.6);
    if (f < best_f) {
      best_f = f;
      best_phi = phi;
    }
  }
  bool monotone = true;
  for (size_t i = 1; i < trace.objective_per_iter.size(); ++i) {
    monotone &=
        trace.objective_per_iter[i] <= trace.objective_per_iter[i - 1];
  }
  const double err = std::abs(got - best_phi);
  return {err <= 1e-4 && monotone,
          "angle " + fmt(got) + " vs grid oracle " + fmt(best_phi) +
              ", |diff| " + fmt(err) +
              (monotone ? ", trace monotone" : ", trace NOT monotone")};
}

Outcome nearest_neighbor_limit() {
  std::mt19937_64 rng(1005);
  TrainingSet train;
  for (int i = 0; i < 5; ++i) {
    train.descriptors.push_back(Eigen::VectorXd::Constant(1, double(i)));
    train.subspaces.push_back(random_subspace(rng, 10, 3));
  }
  KernelSpec spec;
  spec.sigma = 1e-3;
  std::tie(spec.factor_mins, spec.factor_maxs) =
      fit_normalizer(train.descriptors);
  const auto [p, trace] =
      predict_subspace(train, spec, train.descriptors[2], {});
  const double d = distance(p, train.subspaces[2],
                            DistanceKind::kBinetCauchy, DistanceForm::kAngles);
  return {d < 1e-6, "BC distance to the matching anchor " + fmt(d)};
}

Outcome gfk_closed_form() {
  std::mt19937_64 rng(1006);
  double worst_int = 0.0, worst_sym = 0.0, worst_eig = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Subspace s = random_subspace(rng, 10, 2);
    const Subspace u = random_subspace(rng, 10, 2);
    const GfkKernel g = gfk_kernel(s, u);
    worst_sym = std::max(worst_sym, (g.g - g.g.transpose()).norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.g);
    worst_eig = std::min(worst_eig, eig.eigenvalues().minCoeff());

    const GfkGeodesic geo = gfk_geodesic(s, u);
    const int steps = 10000;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(10, 10);
    for (int i = 0; i <= steps; ++i) {
      const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
      const Eigen::MatrixXd phi = geo.at(double(i) / steps);
      acc += w * (phi * phi.transpose());
    }
    worst_int = std::max(worst_int, (g.g - acc / steps).norm());
  }
  return {worst_int < 1e-6 && worst_sym < 1e-10 && worst_eig >= -1e-8,
          "max |closed - trapezoid| " + fmt(worst_int) +
              ", max asymmetry " + fmt(worst_sym) + ", min eigenvalue " +
              fmt(worst_eig) + " over 10 pairs"};
}

Outcome sa_optimality() {
  std::mt19937_64 rng(1007);
  const Subspace s = random_subspace(rng, 9, 3);
  const Subspace t = random_subspace(rng, 9, 3);
  const AlignmentMap m = subspace_alignment(s, t);
  const double best = (s.basis * m.m - t.basis).squaredNorm();
  int beaten = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd delta = random_matrix(rng, 3, 3);
    delta *= 1e-3 / delta.norm();
    if ((s.basis * (m.m + delta) - t.basis).squaredNorm() > best) ++beaten;
  }
  return {beaten == 50, "closed form beats " + std::to_string(beaten) +
                            "/50 perturbations of norm 1e-3"};
}

// ---- criteria 8-10: synthetic end-to-end ------------------------------------

constexpr int kDim = 3;         // subspace dimension for the harness
constexpr double kSigma = 0.3;  // RBF bandwidth on the 3x3 grid

SynthConfig harness_config(std::uint64_t seed) {
  SynthConfig cfg;
  cfg.grid_z1 = {5, 10, 15};
  cfg.grid_z2 = {1.5, 2, 3};
  cfg.num_classes = 10;
  cfg.ambient_dim = 64;
  cfg.samples_per_class = 40;
  cfg.noise_std = 0.05;
  cfg.seed = seed;
  return cfg;
}

struct CenterRun {
  EvalReport report;
  double ceiling = 0.0;  // within-target 1-NN accuracy (train -> test)
  std::string report_bytes;
};

CenterRun run_center_target(std::uint64_t seed,
                            const std::filesystem::path &dir) {
  const DomainManifest manifest =
      generate_synthetic(harness_config(seed), dir);
  CenterRun run;
  run.report = evaluate_target(manifest, "d5", kDim, kSigma, DaMethod::kGfk,
                               {}, static_cast<std::int64_t>(seed));
  run.report_bytes = to_json(run.report).dump(2);

  const LoadedDomain target = load_domain(manifest, *manifest.find("d5"));
  const Eigen::VectorXi got = euclidean_classify(
      target.rows(true), target.label_rows(true), target.rows(false));
  const Eigen::VectorXi want = target.label_rows(false);
  int hits = 0;
  for (int i = 0; i < got.size(); ++i) hits += (got(i) == want(i));
  run.ceiling = double(hits) / double(got.size());
  return run;
}

std::filesystem::path scratch_root() {
  const auto root = std::filesystem::temp_directory_path() /
                    ("zsda_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(root);
  return root;
}

// Shared across criteria 8 and 10 (10 re-runs seed 1 and compares bytes).
std::string g_seed1_report_bytes;

Outcome synthetic_center_lift() {
  const auto root = scratch_root();
  double sum_no = 0.0, sum_da = 0.0, sum_ceiling = 0.0;
  bool lifted_every_seed = true;
  std::string per_seed;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const CenterRun run =
        run_center_target(seed, root / ("c8_seed" + std::to_string(seed)));
    if (seed == 1) g_seed1_report_bytes = run.report_bytes;
    const double no = run.report.avg_no_da;
    const double da = run.report.avg_zsda_da.value_or(0.0);
    lifted_every_seed &= (da > no);
    sum_no += no;
    sum_da += da;
    sum_ceiling += run.ceiling;
  }
  const double mean_no = sum_no / 5.0, mean_da = sum_da / 5.0,
               mean_ceiling = sum_ceiling / 5.0;
  const double recovery = (mean_da - mean_no) / (mean_ceiling - mean_no);
  const bool pass =
      lifted_every_seed && mean_ceiling > mean_no && recovery >= 0.40;
  return {pass, "no-DA " + fmt(mean_no) + ", zsda-gfk " + fmt(mean_da) +
                    ", ceiling " + fmt(mean_ceiling) + "; lift on " +
                    std::string(lifted_every_seed ? "5/5" : "<5/5") +
                    " seeds; gap recovery " + fmt(recovery * 100.0) + "%"};
}

Outcome synthetic_all_targets() {
  const auto root = scratch_root();
  double wins_needed_no[9] = {0}, wins_needed_da[9] = {0};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto dir = root / ("c9_seed" + std::to_string(seed));
    const DomainManifest manifest =
        generate_synthetic(harness_config(seed), dir);
    const std::vector<EvalReport> reports = evaluate_all_targets(
        manifest, kDim, kSigma, DaMethod::kGfk, {},
        static_cast<std::int64_t>(seed));
    for (size_t i = 0; i < reports.size(); ++i) {
      wins_needed_no[i] += reports[i].avg_no_da / 5.0;
      wins_needed_da[i] += reports[i].avg_zsda_da.value_or(0.0) / 5.0;
    }
  }
  int wins = 0;
  for (int i = 0; i < 9; ++i) {
    if (wins_needed_da[i] >= wins_needed_no[i]) ++wins;
  }
  return {wins >= 8, "zsda-gfk seed-averaged mean >= no-DA on " +
                         std::to_string(wins) + "/9 targets"};
}

Outcome determinism() {
  const auto root = scratch_root();
  if (g_seed1_report_bytes.empty()) {
    return {false, "criterion 8 did not record a baseline report"};
  }
  const CenterRun rerun = run_center_target(1, root / "c10_seed1");
  const bool same = rerun.report_bytes == g_seed1_report_bytes;
  return {same, same ? "seed-1 report JSON byte-identical across runs"
                     : "seed-1 report JSON differs between runs"};
}

}  // namespace

int main() {
  const auto root = scratch_root();
  bool all = true;
  all &= run_criterion(1, "Table-1 dual-form agreement", 5.0,
                       dual_form_agreement);
  all &= run_criterion(2, "Cayley update feasibility", 10.0,
                       cayley_feasibility);
  all &= run_criterion(3, "gradient vs finite differences", 10.0,
                       gradient_check);
  all &= run_criterion(4, "two-line Frechet mean vs grid oracle", 1.0,
                       frechet_oracle);
  all &= run_criterion(5, "nearest-neighbor limit at tiny sigma", 1.0,
                       nearest_neighbor_limit);
  all &= run_criterion(6, "GFK closed form vs integration", 30.0,
                       gfk_closed_form);
  all &= run_criterion(7, "SA closed-form optimality", 0.0, sa_optimality);
  all &= run_criterion(8, "synthetic center-target lift", 300.0,
                       synthetic_center_lift);
  all &= run_criterion(9, "synthetic all-targets lift", 900.0,
                       synthetic_all_targets);
  all &= run_criterion(10, "report determinism", 0.0, determinism);

  std::error_code ec;
  std::filesystem::remove_all(root, ec);
  std::puts(all ? "acceptance: ALL CRITERIA PASSED"
                : "acceptance: CRITERIA FAILED");
  return all ? 0 : 1;
}
