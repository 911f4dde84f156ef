// zsda/io.hpp
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

#ifndef ZSDA_IO_HPP_
#define ZSDA_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include "zsda/grassmann.hpp"

namespace zsda::io {

// ---- audit -----------------------------------------------------------------
// Optional process-wide log of file opens, tagged with the phase of the
// pipeline that triggered them.  The evaluation harness uses it to verify
// the zero-shot contract: no target-domain file may be opened during the
// subspace-prediction phase.  Not thread-safe; intended for tests and
// single-threaded tracing.

struct AuditRecord {
  std::string path;
  std::string phase;
};

class Audit {
 public:
  static void enable();
  static void disable();
  static void reset();
  static void set_phase(const std::string &phase);
  static void record(const std::string &path);
  static const std::vector<AuditRecord> &records();
};

// ---- CSV -------------------------------------------------------------------
// All numeric output uses 17 significant digits (%.17g), enough to
// round-trip doubles exactly, so repeated runs are byte-identical.

// Rectangular matrix of comma-separated decimals, no header.
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path &path);
void write_matrix_csv(const Eigen::MatrixXd &m,
                      const std::filesystem::path &path);

// One non-negative integer per line.
Eigen::VectorXi read_labels_csv(const std::filesystem::path &path);
void write_labels_csv(const Eigen::VectorXi &labels,
                      const std::filesystem::path &path);

// One token per line, "train" or "test"; true marks a training row.
std::vector<char> read_split_csv(const std::filesystem::path &path);
void write_split_csv(const std::vector<char> &train_mask,
                     const std::filesystem::path &path);

// Subspace files share the matrix CSV convention (D rows, K columns).  The
// loader checks column orthonormality: deviation <= 1e-6 is accepted as-is,
// <= 1e-3 is silently re-orthonormalized, anything worse is rejected.
Subspace read_subspace_csv(const std::filesystem::path &path);
void write_subspace_csv(const Subspace &p, const std::filesystem::path &path);

// Formats one double with 17 significant digits.
std::string format_double(double v);

}  // namespace zsda::io

#endif  // ZSDA_IO_HPP_
