// zsda/io.cpp
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

#include "zsda/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zsda/errors.hpp"

namespace zsda::io {

namespace {

bool g_audit_enabled = false;
std::string g_audit_phase;
std::vector<AuditRecord> g_audit_records;

std::ifstream open_input(const std::filesystem::path &path) {
  Audit::record(path.string());
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

double parse_double(const std::string &tok, const std::filesystem::path &path,
                    size_t line_no) {
  char *end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') {
    throw IoError("bad numeric field '" + tok + "' at " + path.string() +
                  ":" + std::to_string(line_no));
  }
  return v;
}

std::string strip(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void Audit::enable() { g_audit_enabled = true; }
void Audit::disable() { g_audit_enabled = false; }
void Audit::reset() {
  g_audit_records.clear();
  g_audit_phase.clear();
}
void Audit::set_phase(const std::string &phase) { g_audit_phase = phase; }
void Audit::record(const std::string &path) {
  if (g_audit_enabled) g_audit_records.push_back({path, g_audit_phase});
}
const std::vector<AuditRecord> &Audit::records() { return g_audit_records; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::MatrixXd read_matrix_csv(const std::filesystem::path &path) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      row.push_back(parse_double(strip(tok), path, line_no));
    }
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw IoError("ragged row at " + path.string() + ":" +
                    std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("empty matrix file: " + path.string());
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return m;
}

void write_matrix_csv(const Eigen::MatrixXd &m,
                      const std::filesystem::path &path) {
  std::ofstream out = open_output(path);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

Eigen::VectorXi read_labels_csv(const std::filesystem::path &path) {
  std::ifstream in = open_input(path);
  std::vector<int> vals;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty()) continue;
    char *end = nullptr;
    const long v = std::strtol(body.c_str(), &end, 10);
    if (end == body.c_str() || *end != '\0' || v < 0) {
      throw IoError("bad label '" + body + "' at " + path.string() + ":" +
                    std::to_string(line_no));
    }
    vals.push_back(static_cast<int>(v));
  }
  if (vals.empty()) throw IoError("empty label file: " + path.string());
  return Eigen::Map<const Eigen::VectorXi>(
      vals.data(), static_cast<Eigen::Index>(vals.size()));
}

void write_labels_csv(const Eigen::VectorXi &labels,
                      const std::filesystem::path &path) {
  std::ofstream out = open_output(path);
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    out << labels(i) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<char> read_split_csv(const std::filesystem::path &path) {
  std::ifstream in = open_input(path);
  std::vector<char> mask;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty()) continue;
    if (body == "train") {
      mask.push_back(1);
    } else if (body == "test") {
      mask.push_back(0);
    } else {
      throw IoError("bad split token '" + body + "' at " + path.string() +
                    ":" + std::to_string(line_no));
    }
  }
  if (mask.empty()) throw IoError("empty split file: " + path.string());
  return mask;
}

void write_split_csv(const std::vector<char> &train_mask,
                     const std::filesystem::path &path) {
  std::ofstream out = open_output(path);
  for (char is_train : train_mask) {
    out << (is_train ? "train" : "test") << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

Subspace read_subspace_csv(const std::filesystem::path &path) {
  const Eigen::MatrixXd raw = read_matrix_csv(path);
  const Eigen::MatrixXd gram =
      raw.transpose() * raw -
      Eigen::MatrixXd::Identity(raw.cols(), raw.cols());
  const double dev = gram.norm();
  if (dev <= 1e-6) return Subspace{raw};
  if (dev <= 1e-3) return make_subspace(raw);
  throw IoError("subspace file " + path.string() +
                " is not orthonormal (deviation " + format_double(dev) +
                " exceeds 1e-3)");
}

void write_subspace_csv(const Subspace &p, const std::filesystem::path &path) {
  write_matrix_csv(p.basis, path);
}

}  // namespace zsda::io
