// zsda/pipeline.cpp
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

#include "zsda/pipeline.hpp"

#include <algorithm>
#include <limits>

#include "zsda/classify.hpp"
#include "zsda/errors.hpp"
#include "zsda/io.hpp"

namespace zsda {

namespace {

double accuracy(const Eigen::VectorXi &predicted, const Eigen::VectorXi &truth) {
  Eigen::Index correct = 0;
  for (Eigen::Index i = 0; i < predicted.size(); ++i) {
    correct += (predicted(i) == truth(i));
  }
  return static_cast<double>(correct) / static_cast<double>(predicted.size());
}

KernelSpec make_fitted_spec(const std::vector<DomainDescriptor> &descriptors,
                            double sigma) {
  if (!(sigma > 0.0)) throw InvalidConfig("sigma must be positive");
  KernelSpec spec;
  spec.sigma = sigma;
  std::tie(spec.factor_mins, spec.factor_maxs) = fit_normalizer(descriptors);
  return spec;
}

}  // namespace

std::string to_string(DaMethod da) {
  switch (da) {
    case DaMethod::kNone: return "none";
    case DaMethod::kSa: return "sa";
    case DaMethod::kGfk: return "gfk";
  }
  return "none";
}

DaMethod da_method_from_string(const std::string &name) {
  if (name == "none") return DaMethod::kNone;
  if (name == "sa") return DaMethod::kSa;
  if (name == "gfk") return DaMethod::kGfk;
  throw InvalidConfig("unknown DA method '" + name + "' (none|sa|gfk)");
}

nlohmann::ordered_json to_json(const EvalReport &report) {
  nlohmann::ordered_json j;
  j["target_id"] = report.target_id;
  j["rows"] = nlohmann::ordered_json::array();
  for (const EvalRow &row : report.rows) {
    nlohmann::ordered_json r;
    r["source_id"] = row.source_id;
    r["accuracy_no_da"] = row.accuracy_no_da;
    if (row.accuracy_zsda_da) r["accuracy_zsda_da"] = *row.accuracy_zsda_da;
    j["rows"].push_back(std::move(r));
  }
  j["avg_no_da"] = report.avg_no_da;
  if (report.avg_zsda_da) j["avg_zsda_da"] = *report.avg_zsda_da;
  nlohmann::ordered_json cfg;
  cfg["k"] = report.config.k;
  cfg["sigma"] = report.config.sigma;
  cfg["da"] = to_string(report.config.da);
  if (report.config.seed) cfg["seed"] = *report.config.seed;
  j["config"] = std::move(cfg);
  return j;
}

int default_subspace_dim(const DomainManifest &manifest,
                         std::optional<int> requested) {
  if (manifest.entries.empty()) throw InvalidConfig("empty manifest");
  if (requested && *requested < 1) {
    throw InvalidConfig("subspace dimension must be >= 1");
  }
  int feasible = std::numeric_limits<int>::max();
  int ambient = 0;
  for (const ManifestEntry &entry : manifest.entries) {
    const LoadedDomain domain = load_domain(manifest, entry);
    const Eigen::MatrixXd rows = learning_rows(domain);
    ambient = static_cast<int>(rows.cols());
    feasible = std::min(
        feasible, static_cast<int>(std::min(rows.cols(), rows.rows() - 1)));
  }
  if (feasible < 1) {
    throw InsufficientSamples("no domain has enough samples for K >= 1");
  }
  if (requested) return std::min(*requested, feasible);
  const int heuristic = std::max(1, ambient / 8);
  return std::min(heuristic, feasible);
}

std::pair<Subspace, OptimizerTrace> zsda_predict(
    const DomainManifest &manifest, const DomainDescriptor &target_descriptor,
    int k, double sigma, const OptimizerConfig &cfg) {
  if (manifest.entries.empty()) throw InvalidConfig("empty manifest");

  TrainingSet train;
  for (const ManifestEntry &entry : manifest.entries) {
    const LoadedDomain domain = load_domain(manifest, entry);
    DomainDataset learn_view;
    learn_view.features = learning_rows(domain);
    learn_view.id = entry.id;
    learn_view.descriptor = entry.descriptor;
    train.descriptors.push_back(entry.descriptor);
    train.subspaces.push_back(learn_subspace(learn_view, k));
  }

  const KernelSpec spec = make_fitted_spec(train.descriptors, sigma);
  return predict_subspace(train, spec, target_descriptor, cfg);
}

EvalReport evaluate_target(const DomainManifest &manifest,
                           const std::string &target_id, int k, double sigma,
                           DaMethod da, const OptimizerConfig &cfg,
                           std::optional<std::int64_t> seed_echo) {
  const ManifestEntry *target_entry = manifest.find(target_id);
  if (target_entry == nullptr) {
    throw UnknownTargetId("no domain '" + target_id + "' in manifest");
  }

  DomainManifest sources = manifest;
  sources.entries.erase(
      std::remove_if(sources.entries.begin(), sources.entries.end(),
                     [&](const ManifestEntry &e) { return e.id == target_id; }),
      sources.entries.end());
  if (sources.entries.empty()) {
    throw InvalidConfig("evaluation needs at least one source domain");
  }

  // Phase 1 — zero-shot prediction: only source files may be touched.
  io::Audit::set_phase("predict");
  std::vector<LoadedDomain> source_domains;
  TrainingSet train;
  for (const ManifestEntry &entry : sources.entries) {
    LoadedDomain domain = load_domain(sources, entry);
    if (!domain.data.labels) {
      throw MissingLabels("source domain '" + entry.id + "' has no labels");
    }
    if (!domain.has_split()) {
      throw InvalidInput("source domain '" + entry.id + "' has no split file");
    }
    DomainDataset learn_view;
    learn_view.features = learning_rows(domain);
    learn_view.id = entry.id;
    learn_view.descriptor = entry.descriptor;
    train.descriptors.push_back(entry.descriptor);
    train.subspaces.push_back(learn_subspace(learn_view, k));
    source_domains.push_back(std::move(domain));
  }
  const KernelSpec spec = make_fitted_spec(train.descriptors, sigma);
  Subspace predicted;
  if (da != DaMethod::kNone) {
    predicted =
        predict_subspace(train, spec, target_entry->descriptor, cfg).first;
  }

  // Phase 2 — scoring: the target's files are read here and only here.
  io::Audit::set_phase("score");
  const LoadedDomain target = load_domain(manifest, *target_entry);
  if (!target.data.labels) {
    throw MissingLabels("target domain '" + target_id +
                        "' has no labels to score against");
  }
  if (!target.has_split()) {
    throw InvalidInput("target domain '" + target_id + "' has no split file");
  }
  const Eigen::MatrixXd test_x = target.rows(false);
  const Eigen::VectorXi test_y = target.label_rows(false);
  if (test_x.rows() == 0) {
    throw InvalidInput("target domain '" + target_id + "' has an empty test split");
  }

  EvalReport report;
  report.target_id = target_id;
  report.config = EvalConfigEcho{k, sigma, da, seed_echo};
  double sum_no = 0.0, sum_da = 0.0;
  for (size_t s = 0; s < source_domains.size(); ++s) {
    const LoadedDomain &src = source_domains[s];
    const Eigen::MatrixXd train_x = src.rows(true);
    const Eigen::VectorXi train_y = src.label_rows(true);

    EvalRow row;
    row.source_id = src.data.id;
    row.accuracy_no_da =
        accuracy(euclidean_classify(train_x, train_y, test_x), test_y);
    sum_no += row.accuracy_no_da;

    if (da == DaMethod::kSa) {
      const AlignmentMap map = subspace_alignment(train.subspaces[s], predicted);
      row.accuracy_zsda_da =
          accuracy(sa_classify(train_x, train_y, test_x, train.subspaces[s],
                               predicted, map),
                   test_y);
    } else if (da == DaMethod::kGfk) {
      const GfkKernel kernel = gfk_kernel(train.subspaces[s], predicted);
      row.accuracy_zsda_da = accuracy(
          gfk_classify(train_x, train_y, test_x, kernel), test_y);
    }
    if (row.accuracy_zsda_da) sum_da += *row.accuracy_zsda_da;
    report.rows.push_back(std::move(row));
  }

  const double n_rows = static_cast<double>(report.rows.size());
  report.avg_no_da = sum_no / n_rows;
  if (da != DaMethod::kNone) report.avg_zsda_da = sum_da / n_rows;
  return report;
}

std::vector<EvalReport> evaluate_all_targets(
    const DomainManifest &manifest, int k, double sigma, DaMethod da,
    const OptimizerConfig &cfg, std::optional<std::int64_t> seed_echo) {
  std::vector<EvalReport> reports;
  reports.reserve(manifest.entries.size());
  for (const ManifestEntry &entry : manifest.entries) {
    reports.push_back(
        evaluate_target(manifest, entry.id, k, sigma, da, cfg, seed_echo));
  }
  return reports;
}

nlohmann::ordered_json summarize_reports(
    const std::vector<EvalReport> &reports) {
  if (reports.empty()) throw InvalidInput("no reports to summarize");
  nlohmann::ordered_json j;
  j["targets"] = nlohmann::ordered_json::array();
  double sum_no = 0.0, sum_da = 0.0;
  bool any_da = false;
  for (const EvalReport &r : reports) {
    nlohmann::ordered_json t;
    t["target_id"] = r.target_id;
    t["avg_no_da"] = r.avg_no_da;
    if (r.avg_zsda_da) {
      t["avg_zsda_da"] = *r.avg_zsda_da;
      sum_da += *r.avg_zsda_da;
      any_da = true;
    }
    sum_no += r.avg_no_da;
    j["targets"].push_back(std::move(t));
  }
  const double n = static_cast<double>(reports.size());
  j["mean_no_da"] = sum_no / n;
  if (any_da) j["mean_zsda_da"] = sum_da / n;
  nlohmann::ordered_json cfg;
  cfg["k"] = reports[0].config.k;
  cfg["sigma"] = reports[0].config.sigma;
  cfg["da"] = to_string(reports[0].config.da);
  if (reports[0].config.seed) cfg["seed"] = *reports[0].config.seed;
  j["config"] = std::move(cfg);
  return j;
}

}  // namespace zsda
