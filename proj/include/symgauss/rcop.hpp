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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/linalg.hpp"
#include "symgauss/partition.hpp"

namespace symgauss {

// Bijection of {0..n-1}; image(i) is where i is sent.
class Permutation {
 public:
  Permutation() = default;

  // Throws NotPermutation unless `images` is a bijection.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(std::size_t n);
  // Explicit label mapping; unmapped labels are fixed. Throws UnknownVertex,
  // NotPermutation.
  static Permutation from_mapping(const std::vector<std::string>& ground,
                                  const std::map<std::string, std::string>& mapping);
  // Disjoint cycles of labels, e.g. {{"B1","B2"},{"L1","L2"}}.
  static Permutation from_cycles(const std::vector<std::string>& ground,
                                 const std::vector<std::vector<std::string>>& cycles);

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  // Cycle notation without fixed points, "(B1 B2)(L1 L2)"; "()" for identity.
  std::string to_cycle_string(const std::vector<std::string>& labels) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// G(sigma) with G(sigma)(alpha, beta) = 1 iff sigma maps beta to alpha.
Matrix permutation_matrix(const Permutation& sigma);

// Throws GroundMismatch when sigma's size differs from |V|.
bool is_automorphism(const Graph& g, const Permutation& sigma);

// First edge whose image is not an edge, if any.
std::optional<Edge> first_broken_edge(const Graph& g, const Permutation& sigma);

// Orbits of the group generated by `generators`, computed as connected
// components of alpha ~ sigma(alpha) with a union-find; the group itself is
// never enumerated. Throws NotAutomorphism naming the generator and edge.
Partition vertex_orbits(const Graph& g, const std::vector<Permutation>& generators);
Partition edge_orbits(const Graph& g, const std::vector<Permutation>& generators);

// Coloring by vertex and edge orbits.
ColoredGraph rcop_coloring(const Graph& g, const std::vector<Permutation>& generators);

// max |G(sigma) K G(sigma)^{-1} - K| <= tol. Throws DimensionMismatch.
bool is_group_invariant(const Matrix& k, const Permutation& sigma, double tol = kMembershipTolerance);

}  // namespace symgauss
