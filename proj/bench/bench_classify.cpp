// bench/bench_classify.cpp
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

// Compares the OpenMP 1-NN kernels against their serial reference
// implementations over a range of problem sizes.

#include <random>

#include <benchmark/benchmark.h>
#include <Eigen/Dense>

#include "zsda/adaptation.hpp"
#include "zsda/classify.hpp"
#include "zsda/grassmann.hpp"

namespace {

struct Problem {
  Eigen::MatrixXd train;
  Eigen::VectorXi labels;
  Eigen::MatrixXd test;
  zsda::GfkKernel kernel;
};

Problem make_problem(int n_train, int n_test, int dim) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto fill = [&](Eigen::MatrixXd &m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = gauss(rng);
  };
  Problem p;
  p.train.resize(n_train, dim);
  p.test.resize(n_test, dim);
  fill(p.train);
  fill(p.test);
  p.labels.resize(n_train);
  for (int i = 0; i < n_train; ++i) p.labels(i) = i % 10;

  Eigen::MatrixXd raw_s(dim, 4), raw_t(dim, 4);
  fill(raw_s);
  fill(raw_t);
  p.kernel = zsda::gfk_kernel(zsda::make_subspace(raw_s),
                              zsda::make_subspace(raw_t));
  return p;
}

void euclidean_serial(benchmark::State &state) {
  const Problem p =
      make_problem(int(state.range(0)), int(state.range(0)), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zsda::euclidean_classify_serial(p.train, p.labels, p.test));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void euclidean_parallel(benchmark::State &state) {
  const Problem p =
      make_problem(int(state.range(0)), int(state.range(0)), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zsda::euclidean_classify(p.train, p.labels, p.test));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void gfk_serial(benchmark::State &state) {
  const Problem p =
      make_problem(int(state.range(0)), int(state.range(0)), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zsda::gfk_classify_serial(p.train, p.labels, p.test, p.kernel));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void gfk_parallel(benchmark::State &state) {
  const Problem p =
      make_problem(int(state.range(0)), int(state.range(0)), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zsda::gfk_classify(p.train, p.labels, p.test, p.kernel));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(euclidean_serial)->Arg(200)->Arg(800)->Arg(2000);
BENCHMARK(euclidean_parallel)->Arg(200)->Arg(800)->Arg(2000);
BENCHMARK(gfk_serial)->Arg(200)->Arg(800)->Arg(2000);
BENCHMARK(gfk_parallel)->Arg(200)->Arg(800)->Arg(2000);

BENCHMARK_MAIN();
