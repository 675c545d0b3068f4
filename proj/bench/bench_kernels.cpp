// Copyright 2026 The symgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "symgauss/colored_graph.hpp"
#include "symgauss/kernels.hpp"
#include "symgauss/rng.hpp"

using namespace symgauss;

namespace {

Matrix random_rows(Eigen::Index n, Eigen::Index p) {
  Rng rng(1);
  Matrix rows(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) rows(i, j) = rng.normal();
  return rows;
}

// 8-cycle, one vertex class, alternating edge classes.
ColoredGraph cycle8() {
  std::vector<std::string> v;
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) {
    v.push_back("v" + std::to_string(i));
    edges.push_back(Edge::make(i, (i + 1) % 8));
  }
  Graph g(v, edges);
  std::vector<int> edge_labels;
  for (const auto& e : g.edges()) edge_labels.push_back(e.b - e.a == 1 ? e.a % 2 : 1);
  return ColoredGraph(g, Partition::whole(8), Partition::from_labels(edge_labels));
}

void BM_SspSerial(benchmark::State& state) {
  const auto rows = random_rows(state.range(0), 10);
  const Vector mu = rows.colwise().mean().transpose();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::residual_ssp_serial(rows, mu));
}

void BM_SspParallel(benchmark::State& state) {
  const auto rows = random_rows(state.range(0), 10);
  const Vector mu = rows.colwise().mean().transpose();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::residual_ssp_parallel(rows, mu));
}

void BM_SampledSerial(benchmark::State& state) {
  const auto g = cycle8();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sampled_invariance_serial(g, Partition::singletons(8),
                                                                static_cast<int>(state.range(0)), 1, 1e-8));
}

void BM_SampledParallel(benchmark::State& state) {
  const auto g = cycle8();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sampled_invariance_parallel(g, Partition::singletons(8),
                                                                  static_cast<int>(state.range(0)), 1, 1e-8));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto g = cycle8();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_valid_partitions_serial(g, 8));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto g = cycle8();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_valid_partitions_parallel(g, 8));
}

}  // namespace

BENCHMARK(BM_SspSerial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_SspParallel)->Arg(1000)->Arg(100000);
BENCHMARK(BM_SampledSerial)->Arg(20)->Arg(200);
BENCHMARK(BM_SampledParallel)->Arg(20)->Arg(200);
BENCHMARK(BM_EnumerateSerial);
BENCHMARK(BM_EnumerateParallel);

BENCHMARK_MAIN();
