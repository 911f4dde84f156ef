// zsda/dataset.hpp
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

#ifndef ZSDA_DATASET_HPP_
#define ZSDA_DATASET_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include "zsda/adaptation.hpp"

namespace zsda {

// One manifest entry: where a domain's files live and what descriptor it
// carries.  Paths are stored relative to the manifest's directory.
struct ManifestEntry {
  std::string id;
  Eigen::VectorXd descriptor;
  std::string features_path;
  std::optional<std::string> labels_path;
};

struct DomainManifest {
  std::filesystem::path base_dir;  // directory the manifest file lives in
  std::vector<ManifestEntry> entries;

  const ManifestEntry *find(const std::string &id) const;
};

// Parses {"domains":[{"id":...,"descriptor":[...],"features":...,
// "labels":...}]}.  Validates unique ids and consistent descriptor lengths.
// Throws IoError / InvalidConfig.
DomainManifest load_manifest(const std::filesystem::path &path);
void save_manifest(const DomainManifest &manifest,
                   const std::filesystem::path &path);

// A domain pulled into memory, with the optional train/test mask read from
// the companion `<id>_split.csv` next to the manifest (absent file => no
// mask).  File opens go through the audit hook.
struct LoadedDomain {
  DomainDataset data;
  std::optional<std::vector<char>> train_mask;  // 1 = train row

  bool has_split() const { return train_mask.has_value(); }
  Eigen::MatrixXd rows(bool train) const;       // feature subset by mask
  Eigen::VectorXi label_rows(bool train) const; // label subset by mask
};

LoadedDomain load_domain(const DomainManifest &manifest,
                         const ManifestEntry &entry);

// Feature rows used for subspace learning: the training split when a mask
// exists, every row otherwise.
Eigen::MatrixXd learning_rows(const LoadedDomain &domain);

}  // namespace zsda

#endif  // ZSDA_DATASET_HPP_
