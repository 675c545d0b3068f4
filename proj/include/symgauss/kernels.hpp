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

#pragma once

#include <cstdint>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/linalg.hpp"
#include "symgauss/partition.hpp"

// Data-parallel kernels. Each *_parallel routine is the production path and
// is deterministic regardless of the OpenMP thread count; the matching
// *_serial routine is the plain reference the tests compare against.
namespace symgauss::kernels {

// Rows per reduction chunk in residual_ssp_parallel. Chunk partial sums are
// added in chunk order, so the result does not depend on scheduling.
inline constexpr Eigen::Index kSspChunkRows = 256;

// sum_i (y_i - mu)(y_i - mu)^T over the rows of `rows` (n x p).
Matrix residual_ssp_serial(const Matrix& rows, const Vector& mu);
Matrix residual_ssp_parallel(const Matrix& rows, const Vector& mu);

struct SampledInvariance {
  bool rcon = true;
  bool rcor = true;
};

// Draw i (0 <= i < n_samples) uses seed derive_seed(seed, 2i) for the RCON
// sample and derive_seed(seed, 2i + 1) for the RCOR sample.
SampledInvariance sampled_invariance_serial(const ColoredGraph& g, const Partition& m, int n_samples,
                                            std::uint64_t seed, double tol);
SampledInvariance sampled_invariance_parallel(const ColoredGraph& g, const Partition& m, int n_samples,
                                              std::uint64_t seed, double tol);

// Valid mean partitions in restricted-growth-string order. Throws TooLarge.
std::vector<Partition> enumerate_valid_partitions_serial(const ColoredGraph& g, std::size_t max_ground_size);
std::vector<Partition> enumerate_valid_partitions_parallel(const ColoredGraph& g, std::size_t max_ground_size);

// omp_get_max_threads(), or 1 without OpenMP.
int max_threads();

}  // namespace symgauss::kernels
