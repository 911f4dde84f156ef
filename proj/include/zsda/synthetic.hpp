// zsda/synthetic.hpp
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

#ifndef ZSDA_SYNTHETIC_HPP_
#define ZSDA_SYNTHETIC_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zsda/dataset.hpp"

namespace zsda {

// Configuration of the synthetic parametrized-domain family.  The domain
// grid is the Cartesian product of the two factor-level lists; each grid
// point z = (z1, z2) yields one domain whose samples are the shared base
// samples pushed through a smooth z-dependent map:
//
//   rotation by an angle proportional to the normalized z1 in a fixed random
//   2-plane, then uniform scaling by 1/z2, then isotropic Gaussian noise of
//   noise_std.
//
// The base samples (class means plus within-class spread) are drawn once
// from the seed, so the identity grid point (rotation 0, scale 1) with
// noise_std = 0 reproduces them exactly.  The 50/50 class-stratified
// train/test split is decided once on base sample indices and shared by
// every domain.  All randomness is derived from `seed` through independent
// per-purpose streams keyed by descriptor values, so adding a domain or a
// grid level never perturbs existing domains' samples.
struct SynthConfig {
  std::vector<double> grid_z1;     // first-factor levels, e.g. {5, 10, 15}
  std::vector<double> grid_z2;     // second-factor levels, e.g. {1.5, 2, 3}
  int num_classes = 10;
  int ambient_dim = 64;            // D, must be >= num_classes + 2
  int samples_per_class = 40;
  double noise_std = 0.05;
  std::uint64_t seed = 42;
};

// Parses a grid string of the form "5,10,15x1.5,2,3" into the two factor
// lists.  Throws InvalidConfig.
std::pair<std::vector<double>, std::vector<double>> parse_grid(
    const std::string &text);

// Materializes every domain of the grid under `out_dir` (created if needed):
// <id>_X.csv, <id>_y.csv, <id>_split.csv per domain plus manifest.json,
// where ids run d1, d2, ... with the first factor outermost.  Deterministic:
// the same config writes byte-identical files.  Returns the manifest.
// Throws InvalidConfig on a bad config, IoError on write failure.
DomainManifest generate_synthetic(const SynthConfig &cfg,
                                  const std::filesystem::path &out_dir);

}  // namespace zsda

#endif  // ZSDA_SYNTHETIC_HPP_
