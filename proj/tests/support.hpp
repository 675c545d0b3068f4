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
#include <optional>
#include <string>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/estimation.hpp"
#include "symgauss/model_file.hpp"
#include "symgauss/partition.hpp"
#include "symgauss/rcop.hpp"
#include "symgauss/rng.hpp"

namespace symgauss::testing {

std::string data_path(const std::string& file);

std::vector<std::string> vertex_names(std::size_t n);

// Uniform random labels in [0, k) for k drawn in [1, n].
Partition random_partition(Rng& rng, std::size_t n);

// Random merge of blocks of p.
Partition random_coarsening(Rng& rng, const Partition& p);

// Random graph: edge probability drawn uniformly per graph.
Graph random_graph(Rng& rng, std::size_t n);

// Random graph closed under a random permutation, so it has at least one
// non-trivial automorphism most of the time.
Graph random_symmetric_graph(Rng& rng, std::size_t n);

// Random graph with random vertex and edge colorings.
ColoredGraph random_colored_graph(Rng& rng, std::size_t min_n, std::size_t max_n);

// A mix of colorings that are regular (orbits, refinements) and arbitrary.
ColoredGraph mixed_colored_graph(Rng& rng, std::size_t min_n, std::size_t max_n);

// Mean partitions biased toward interesting cases: valid ones, coarsenings
// of the vertex coloring and uniform random ones.
Partition mixed_mean_partition(Rng& rng, const ColoredGraph& g);

// Every automorphism of g, by trying all |V|! permutations. Identity first,
// then lexicographic order of image vectors.
std::vector<Permutation> automorphisms_serial(const Graph& g);
std::vector<Permutation> automorphisms_parallel(const Graph& g);

// Up to `max_count` random non-identity elements of auts.
std::vector<Permutation> pick_generators(Rng& rng, const std::vector<Permutation>& auts, int max_count);

// n draws from N(mu, K^{-1}).
Matrix gaussian_rows(Rng& rng, const Vector& mu, const Matrix& k, std::size_t n);

// n rows from N(mu, K^{-1}) with mu uniform on [-5, 5] per block of m and K
// drawn from the RCON space of g.
Dataset simulate_dataset(Rng& rng, const ColoredGraph& g, const Partition& m, std::size_t n);

// Two independent columns x ~ N(0, 1), y ~ N(3, 100), 30 rows.
Dataset behrens_fisher_data();

ModelSpec spec_from(const ColoredGraph& g, const std::optional<Partition>& mean = std::nullopt);

}  // namespace symgauss::testing
