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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/partition.hpp"

namespace symgauss {

// One concrete violation of a regularity condition.
struct Witness {
  enum class Kind {
    // Two edges of one edge class join different pairs of vertex classes.
    // first/second are edge indices; *_classes the unordered class pairs.
    EdgeEndpoints,
    // Two vertices in one block have different neighbour counts into
    // target_block along edge_class. first/second are vertex indices.
    NeighborCount,
    // Two vertices share a mean block but lie in different vertex classes.
    NotFiner,
  };

  Kind kind = Kind::NeighborCount;
  int edge_class = -1;
  int first = -1;
  int second = -1;
  int target_block = -1;
  int first_count = 0;
  int second_count = 0;
  std::pair<int, int> first_classes{-1, -1};
  std::pair<int, int> second_classes{-1, -1};

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Human-readable form. `tested` is the vertex partition the witness refers to
// (the vertex coloring, or a mean partition).
std::string describe(const Witness& w, const ColoredGraph& g, const Partition& tested);

// Outcome of a single condition. A false verdict carries exactly one witness
// (the first violation in canonical order); a true verdict carries none.
struct RegularityCheck {
  bool holds = true;
  std::vector<Witness> witnesses;
};

struct RegularityReport {
  bool edge_regular = true;
  bool vertex_regular = true;
  std::vector<Witness> witnesses;
};

struct EstimabilityVerdict {
  bool holds = true;
  bool finer_ok = true;
  bool vertex_regular_ok = true;
  std::vector<Witness> witnesses;
};

RegularityCheck is_edge_regular(const ColoredGraph& g);

// Equitable partition test for a plain edge set: any two vertices in a common
// block have equal neighbour counts into every block. Throws GroundMismatch if
// an edge endpoint lies outside the partition's ground set.
bool is_equitable(const Partition& m, std::span<const Edge> edges);

// Vertex regularity of (vertex_partition, edge_coloring): vertex_partition is
// equitable with respect to the subgraph of every single edge class.
RegularityCheck is_vertex_regular(const Graph& graph, const Partition& vertex_partition,
                                  const Partition& edge_coloring);
RegularityCheck is_vertex_regular(const ColoredGraph& g);

RegularityReport regularity_report(const ColoredGraph& g);

// The least-squares and maximum-likelihood estimators of a mean restricted to
// be constant on the blocks of m coincide iff m refines the vertex coloring
// and (m, edge coloring) is vertex regular. Throws GroundMismatch.
EstimabilityVerdict mean_mle_equals_ls(const ColoredGraph& g, const Partition& m);

// Coarsest m with m <= vertex coloring and (m, edge coloring) vertex regular.
// Color refinement: starting from the vertex coloring, split every block by
// the per-(edge class, block) neighbour-count signature until nothing splits.
Partition coarsest_regular_refinement(const ColoredGraph& g);

// Refinement from an arbitrary starting partition (same splitting rule).
Partition refine_until_regular(const Graph& graph, const Partition& start, const Partition& edge_coloring);

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

// Every partition m of the vertex set for which mean_mle_equals_ls holds, by
// exhaustive enumeration of set partitions in restricted-growth-string order.
// Throws TooLarge when |V| > max_ground_size.
std::vector<Partition> enumerate_valid_partitions(const ColoredGraph& g,
                                                  std::size_t max_ground_size = kDefaultEnumerationLimit);

}  // namespace symgauss
