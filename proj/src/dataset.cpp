// zsda/dataset.cpp
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

#include "zsda/dataset.hpp"

#include <fstream>
#include <set>

#include "json.hpp"
#include "zsda/errors.hpp"
#include "zsda/io.hpp"

namespace zsda {

const ManifestEntry *DomainManifest::find(const std::string &id) const {
  for (const ManifestEntry &e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

DomainManifest load_manifest(const std::filesystem::path &path) {
  io::Audit::record(path.string());
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw IoError("manifest parse error in " + path.string() + ": " +
                  e.what());
  }

  DomainManifest manifest;
  manifest.base_dir = path.has_parent_path() ? path.parent_path()
                                             : std::filesystem::path(".");
  if (!j.contains("domains") || !j["domains"].is_array() ||
      j["domains"].empty()) {
    throw InvalidConfig("manifest has no domains: " + path.string());
  }

  std::set<std::string> seen;
  Eigen::Index m = -1;
  for (const auto &d : j["domains"]) {
    ManifestEntry e;
    try {
      e.id = d.at("id").get<std::string>();
      const auto desc = d.at("descriptor").get<std::vector<double>>();
      e.descriptor = Eigen::Map<const Eigen::VectorXd>(
          desc.data(), static_cast<Eigen::Index>(desc.size()));
      e.features_path = d.at("features").get<std::string>();
      if (d.contains("labels") && !d["labels"].is_null()) {
        e.labels_path = d["labels"].get<std::string>();
      }
    } catch (const nlohmann::json::exception &ex) {
      throw InvalidConfig("bad manifest entry in " + path.string() + ": " +
                          ex.what());
    }
    if (!seen.insert(e.id).second) {
      throw InvalidConfig("duplicate domain id '" + e.id + "' in manifest");
    }
    if (m < 0) m = e.descriptor.size();
    if (e.descriptor.size() != m || m == 0) {
      throw InvalidConfig("inconsistent descriptor lengths in manifest");
    }
    if (!std::filesystem::exists(manifest.base_dir / e.features_path)) {
      throw InvalidConfig("features file missing for domain '" + e.id +
                          "': " +
                          (manifest.base_dir / e.features_path).string());
    }
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

void save_manifest(const DomainManifest &manifest,
                   const std::filesystem::path &path) {
  nlohmann::ordered_json j;
  j["domains"] = nlohmann::ordered_json::array();
  for (const ManifestEntry &e : manifest.entries) {
    nlohmann::ordered_json d;
    d["id"] = e.id;
    d["descriptor"] = std::vector<double>(
        e.descriptor.data(), e.descriptor.data() + e.descriptor.size());
    d["features"] = e.features_path;
    if (e.labels_path) d["labels"] = *e.labels_path;
    j["domains"].push_back(std::move(d));
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

Eigen::MatrixXd LoadedDomain::rows(bool train) const {
  if (!train_mask) throw InvalidInput("domain '" + data.id + "' has no split");
  if (train_mask->size() != static_cast<size_t>(data.features.rows())) {
    throw InvalidInput("split length mismatch for domain '" + data.id + "'");
  }
  Eigen::Index count = 0;
  for (char t : *train_mask) count += (static_cast<bool>(t) == train);
  Eigen::MatrixXd out(count, data.features.cols());
  Eigen::Index r = 0;
  for (size_t i = 0; i < train_mask->size(); ++i) {
    if (static_cast<bool>((*train_mask)[i]) == train) {
      out.row(r++) = data.features.row(static_cast<Eigen::Index>(i));
    }
  }
  return out;
}

Eigen::VectorXi LoadedDomain::label_rows(bool train) const {
  if (!train_mask) throw InvalidInput("domain '" + data.id + "' has no split");
  if (!data.labels) throw MissingLabels("domain '" + data.id + "' unlabelled");
  Eigen::Index count = 0;
  for (char t : *train_mask) count += (static_cast<bool>(t) == train);
  Eigen::VectorXi out(count);
  Eigen::Index r = 0;
  for (size_t i = 0; i < train_mask->size(); ++i) {
    if (static_cast<bool>((*train_mask)[i]) == train) {
      out(r++) = (*data.labels)(static_cast<Eigen::Index>(i));
    }
  }
  return out;
}

LoadedDomain load_domain(const DomainManifest &manifest,
                         const ManifestEntry &entry) {
  LoadedDomain domain;
  domain.data.id = entry.id;
  domain.data.descriptor = entry.descriptor;
  domain.data.features =
      io::read_matrix_csv(manifest.base_dir / entry.features_path);
  if (entry.labels_path) {
    const Eigen::VectorXi labels =
        io::read_labels_csv(manifest.base_dir / *entry.labels_path);
    if (labels.size() != domain.data.features.rows()) {
      throw InvalidInput("label/feature row mismatch for domain '" +
                         entry.id + "'");
    }
    domain.data.labels = labels;
  }
  const std::filesystem::path split_path =
      manifest.base_dir / (entry.id + "_split.csv");
  if (std::filesystem::exists(split_path)) {
    std::vector<char> mask = io::read_split_csv(split_path);
    if (mask.size() != static_cast<size_t>(domain.data.features.rows())) {
      throw InvalidInput("split/feature row mismatch for domain '" +
                         entry.id + "'");
    }
    domain.train_mask = std::move(mask);
  }
  return domain;
}

Eigen::MatrixXd learning_rows(const LoadedDomain &domain) {
  return domain.has_split() ? domain.rows(true) : domain.data.features;
}

}  // namespace zsda
