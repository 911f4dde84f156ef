// zsda/pipeline.hpp
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

#ifndef ZSDA_PIPELINE_HPP_
#define ZSDA_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zsda/dataset.hpp"
#include "zsda/optimizer.hpp"
#include "zsda/regression.hpp"

namespace zsda {

enum class DaMethod { kNone, kSa, kGfk };

std::string to_string(DaMethod da);
DaMethod da_method_from_string(const std::string &name);

// How evaluation and prediction were configured; echoed into reports.
struct EvalConfigEcho {
  int k = 0;
  double sigma = 0.1;
  DaMethod da = DaMethod::kGfk;
  std::optional<std::int64_t> seed;  // present when the caller tracks one
};

struct EvalRow {
  std::string source_id;
  double accuracy_no_da = 0.0;
  std::optional<double> accuracy_zsda_da;  // absent when da = none
};

// Per-target report: one row per source domain, with column averages.
struct EvalReport {
  std::string target_id;
  std::vector<EvalRow> rows;
  double avg_no_da = 0.0;
  std::optional<double> avg_zsda_da;
  EvalConfigEcho config;
};

// {"target_id":...,"rows":[{"source_id":...,"accuracy_no_da":...,
//  "accuracy_zsda_da":...}],"avg_no_da":...,"avg_zsda_da":...,
//  "config":{...}} — key order fixed so identical runs serialize to
// identical bytes.
nlohmann::ordered_json to_json(const EvalReport &report);

// Default subspace dimension: the 1/8-of-ambient heuristic clamped to what
// every domain can support, min_i min(D, n_i_train - 1).  `requested`
// (from a CLI flag) caps the result when given.
int default_subspace_dim(const DomainManifest &manifest,
                         std::optional<int> requested);

// Predicts the subspace of an unseen domain given only its descriptor:
// learns each manifest domain's PCA subspace (training rows when a split
// exists), fits the kernel normalizer on the manifest descriptors, and runs
// the Grassmannian kernel regression.  Zero-shot by construction — no file
// of any domain matching the query descriptor is ever read, because the
// query enters only as a vector.  `sigma` is the RBF bandwidth on
// normalized descriptors.
std::pair<Subspace, OptimizerTrace> zsda_predict(
    const DomainManifest &manifest, const DomainDescriptor &target_descriptor,
    int k, double sigma, const OptimizerConfig &cfg);

// Leave-one-domain-out evaluation: removes `target_id` from the manifest,
// predicts its subspace from the remaining domains, then for every source
// trains 1-NN classifiers on that source's training split and scores the
// target's test split twice — raw features (No-DA) and after the selected
// subspace DA method fed with (source subspace, predicted target subspace).
// The target's files are only opened in the scoring phase (see io::Audit).
// Throws UnknownTargetId / MissingLabels / InvalidInput.
EvalReport evaluate_target(const DomainManifest &manifest,
                           const std::string &target_id, int k, double sigma,
                           DaMethod da, const OptimizerConfig &cfg,
                           std::optional<std::int64_t> seed_echo = {});

// Runs evaluate_target for every manifest domain in manifest order.
std::vector<EvalReport> evaluate_all_targets(
    const DomainManifest &manifest, int k, double sigma, DaMethod da,
    const OptimizerConfig &cfg, std::optional<std::int64_t> seed_echo = {});

// Cross-target summary of an evaluate_all_targets run.
nlohmann::ordered_json summarize_reports(const std::vector<EvalReport> &reports);

}  // namespace zsda

#endif  // ZSDA_PIPELINE_HPP_
