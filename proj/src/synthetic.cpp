// zsda/synthetic.cpp
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

#include "zsda/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "zsda/errors.hpp"
#include "zsda/io.hpp"

namespace zsda {

namespace {

// Geometry of the base class means, chosen so the whole class signal spans
// only {w1, w2, g}: means sit on a circle of radius kMeanRadius in the
// (w1, w2) plane and are spread over kAxisSpan along g.  The domain map
// rotates in the (g, v) plane, tilting the span's third direction with z1,
// which makes the learned subspaces genuinely descriptor-dependent while a
// small K captures them with clean eigengaps.
constexpr double kMeanRadius = 1.5;
constexpr double kAxisSpan = 3.0;
constexpr double kWithinStd = 0.15;
constexpr double kMaxRotation = 1.2;  // radians at the top of the z1 range

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from the master seed and a purpose tag
// (FNV-1a over the tag, mixed through splitmix64).
std::uint64_t child_seed(std::uint64_t base, const std::string &tag) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return splitmix64(splitmix64(base) ^ h);
}

// Standard normal sampler over a fully-specified engine.  Box-Muller on
// hand-extracted uniforms: std::normal_distribution's algorithm is
// implementation-defined, which would make byte-identical output fragile
// across standard libraries.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : eng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]: log stays finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n) by multiply-shift, again avoiding the
  // implementation-defined std::uniform_int_distribution.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

 private:
  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }  // [0, 1)

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

void fill_gaussian(Gaussian *g, Eigen::MatrixXd *m) {
  for (Eigen::Index i = 0; i < m->rows(); ++i) {
    for (Eigen::Index j = 0; j < m->cols(); ++j) {
      (*m)(i, j) = (*g)();
    }
  }
}

void validate_config(const SynthConfig &cfg) {
  if (cfg.grid_z1.empty() || cfg.grid_z2.empty()) {
    throw InvalidConfig("synthetic grid needs at least one level per factor");
  }
  for (double z2 : cfg.grid_z2) {
    if (!(z2 > 0.0)) {
      throw InvalidConfig("second-factor levels must be positive (scale 1/z2)");
    }
  }
  if (cfg.num_classes < 1 || cfg.ambient_dim < 1 ||
      cfg.samples_per_class < 1) {
    throw InvalidConfig("synthetic counts must be >= 1");
  }
  if (!(cfg.noise_std >= 0.0)) {
    throw InvalidConfig("noise_std must be non-negative");
  }
  if (cfg.ambient_dim < cfg.num_classes + 2 || cfg.ambient_dim < 4) {
    throw InvalidConfig("ambient dimension must be at least num_classes + 2");
  }
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> parse_grid(
    const std::string &text) {
  const size_t cross = text.find('x');
  if (cross == std::string::npos) {
    throw InvalidConfig("grid must look like \"5,10,15x1.5,2,3\"");
  }
  const auto parse_list = [&](const std::string &part) {
    std::vector<double> out;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw InvalidConfig("bad grid level '" + tok + "'");
      }
    }
    if (out.empty()) throw InvalidConfig("empty grid factor list");
    return out;
  };
  return {parse_list(text.substr(0, cross)), parse_list(text.substr(cross + 1))};
}

DomainManifest generate_synthetic(const SynthConfig &cfg,
                                  const std::filesystem::path &out_dir) {
  validate_config(cfg);
  std::filesystem::create_directories(out_dir);

  const int c = cfg.num_classes, d = cfg.ambient_dim;
  const int npc = cfg.samples_per_class, n = c * npc;

  // Base geometry and samples: one draw for the whole family.
  Gaussian base_rng(child_seed(cfg.seed, "base"));
  Eigen::MatrixXd frame_raw(d, 4);
  fill_gaussian(&base_rng, &frame_raw);
  const Eigen::MatrixXd frame = make_subspace(frame_raw).basis;
  const Eigen::VectorXd w1 = frame.col(0), w2 = frame.col(1);
  const Eigen::VectorXd g = frame.col(2), v = frame.col(3);

  Eigen::MatrixXd means(c, d);
  for (int cls = 0; cls < c; ++cls) {
    const double ang = 2.0 * std::numbers::pi * cls / c;
    const double t = (cls + 0.5) / c - 0.5;
    means.row(cls) = kMeanRadius * (std::cos(ang) * w1 + std::sin(ang) * w2) +
                     (kAxisSpan * t) * g;
  }

  Eigen::MatrixXd base(n, d);
  Eigen::VectorXi labels(n);
  for (int i = 0; i < n; ++i) {
    const int cls = i / npc;
    labels(i) = cls;
    for (int j = 0; j < d; ++j) {
      base(i, j) = means(cls, j) + kWithinStd * base_rng();
    }
  }

  // Class-stratified 50/50 split on base sample indices, shared verbatim by
  // every domain so a given base sample never switches sides.
  Gaussian split_rng(child_seed(cfg.seed, "split"));
  std::vector<char> train_mask(static_cast<size_t>(n), 0);
  for (int cls = 0; cls < c; ++cls) {
    std::vector<int> idx(static_cast<size_t>(npc));
    for (int i = 0; i < npc; ++i) idx[static_cast<size_t>(i)] = cls * npc + i;
    for (int i = npc - 1; i > 0; --i) {
      const auto j = static_cast<int>(
          split_rng.bounded(static_cast<std::uint64_t>(i) + 1));
      std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    for (int i = 0; i < npc / 2; ++i) {
      train_mask[static_cast<size_t>(idx[static_cast<size_t>(i)])] = 1;
    }
  }

  const double z1_min = *std::min_element(cfg.grid_z1.begin(), cfg.grid_z1.end());
  const double z1_max = *std::max_element(cfg.grid_z1.begin(), cfg.grid_z1.end());
  const double z1_range = z1_max - z1_min;

  DomainManifest manifest;
  manifest.base_dir = out_dir;
  int domain_no = 0;
  for (double z1 : cfg.grid_z1) {
    for (double z2 : cfg.grid_z2) {
      ++domain_no;
      const std::string id = "d" + std::to_string(domain_no);

      const double phi =
          z1_range > 0.0 ? kMaxRotation * (z1 - z1_min) / z1_range : 0.0;
      Eigen::MatrixXd x = base;
      if (phi != 0.0) {
        // Row-vector form of the rotation by phi in the (g, v) plane:
        // x R^T = x + (cos phi - 1)[(xg)g^T + (xv)v^T]
        //           + sin phi [(xg)v^T - (xv)g^T].
        const Eigen::VectorXd xg = base * g, xv = base * v;
        x.noalias() += (std::cos(phi) - 1.0) *
                       (xg * g.transpose() + xv * v.transpose());
        x.noalias() += std::sin(phi) * (xg * v.transpose() - xv * g.transpose());
      }
      x /= z2;
      if (cfg.noise_std > 0.0) {
        Gaussian domain_rng(child_seed(
            cfg.seed, "domain:" + io::format_double(z1) + "," +
                          io::format_double(z2)));
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
          for (Eigen::Index j = 0; j < x.cols(); ++j) {
            x(i, j) += cfg.noise_std * domain_rng();
          }
        }
      }

      io::write_matrix_csv(x, out_dir / (id + "_X.csv"));
      io::write_labels_csv(labels, out_dir / (id + "_y.csv"));
      io::write_split_csv(train_mask, out_dir / (id + "_split.csv"));

      ManifestEntry entry;
      entry.id = id;
      entry.descriptor = Eigen::Vector2d(z1, z2);
      entry.features_path = id + "_X.csv";
      entry.labels_path = id + "_y.csv";
      manifest.entries.push_back(std::move(entry));
    }
  }

  save_manifest(manifest, out_dir / "manifest.json");
  return manifest;
}

}  // namespace zsda
