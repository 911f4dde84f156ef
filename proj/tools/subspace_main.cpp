// tools/subspace_main.cpp
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
//
// `subspace` — learn a PCA subspace from a feature file, or predict the
// subspace of an unseen domain from its descriptor via kernel regression
// over a domain manifest.
//
//   subspace learn   --features F.csv --dim K --out P.csv
//   subspace predict --manifest m.json --target "10,2" --dim K --sigma 0.1
//                    --out P.csv [--trace trace.json]
//
// Exit codes: 0 success, 2 invalid input/manifest, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zsda/dataset.hpp"
#include "zsda/errors.hpp"
#include "zsda/io.hpp"
#include "zsda/pipeline.hpp"

namespace {

Eigen::VectorXd parse_descriptor(const std::string &text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception &) {
      throw zsda::InvalidConfig("bad descriptor component '" + tok + "'");
    }
  }
  if (vals.empty()) throw zsda::InvalidConfig("empty target descriptor");
  return Eigen::Map<const Eigen::VectorXd>(
      vals.data(), static_cast<Eigen::Index>(vals.size()));
}

int run(int argc, char **argv) {
  CLI::App app{"Subspace learning and zero-shot subspace prediction"};
  app.require_subcommand(1);

  std::string features_path, out_path;
  std::optional<int> dim;

  CLI::App *learn = app.add_subcommand("learn", "PCA subspace of one feature file");
  learn->add_option("--features", features_path, "feature CSV (rows = samples)")
      ->required();
  learn->add_option("--dim", dim, "subspace dimension K");
  learn->add_option("--out", out_path, "output subspace CSV")->required();

  std::string manifest_path, target_text, trace_path;
  double sigma = 0.1;

  CLI::App *predict =
      app.add_subcommand("predict", "predict a subspace from a descriptor");
  predict->add_option("--manifest", manifest_path, "domain manifest JSON")
      ->required();
  predict
      ->add_option("--target", target_text,
                   "target descriptor, comma-separated (e.g. \"10,2\")")
      ->required();
  predict->add_option("--dim", dim, "subspace dimension K");
  predict->add_option("--sigma", sigma, "RBF bandwidth on normalized factors");
  predict->add_option("--out", out_path, "output subspace CSV")->required();
  predict->add_option("--trace", trace_path, "optimizer trace JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);  // prints help text or the parse error
    return code == 0 ? 0 : 2;
  }

  if (learn->parsed()) {
    zsda::DomainDataset data;
    data.features = zsda::io::read_matrix_csv(features_path);
    data.id = features_path;
    const int n = static_cast<int>(data.features.rows());
    const int d = static_cast<int>(data.features.cols());
    int k;
    if (dim) {
      k = *dim;
    } else {
      k = std::max(1, std::min(d / 8, std::min(d, n - 1)));
    }
    zsda::io::write_subspace_csv(zsda::learn_subspace(data, k), out_path);
    return 0;
  }

  const zsda::DomainManifest manifest = zsda::load_manifest(manifest_path);
  const int k = zsda::default_subspace_dim(manifest, dim);
  const Eigen::VectorXd target = parse_descriptor(target_text);
  zsda::OptimizerConfig cfg;
  auto [subspace, trace] =
      zsda::zsda_predict(manifest, target, k, sigma, cfg);
  zsda::io::write_subspace_csv(subspace, out_path);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw zsda::IoError("cannot write trace: " + trace_path);
    out << zsda::to_json(trace).dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const zsda::NumericalError &e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
