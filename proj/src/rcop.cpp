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

#include "symgauss/rcop.hpp"

#include <algorithm>

#include "symgauss/disjoint_sets.hpp"
#include "symgauss/error.hpp"

namespace symgauss {

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> hit(images.size(), false);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || hit[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::NotPermutation, "image list is not a bijection");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return from_images(std::move(images));
}

namespace {

int label_index(const std::vector<std::string>& ground, const std::string& label) {
  auto it = std::find(ground.begin(), ground.end(), label);
  if (it == ground.end()) throw Error(ErrorKind::UnknownVertex, "'" + label + "' is not a vertex");
  return static_cast<int>(it - ground.begin());
}

}  // namespace

Permutation Permutation::from_mapping(const std::vector<std::string>& ground,
                                      const std::map<std::string, std::string>& mapping) {
  std::vector<int> images(ground.size());
  std::iota(images.begin(), images.end(), 0);
  for (const auto& [from, to] : mapping) {
    images[static_cast<std::size_t>(label_index(ground, from))] = label_index(ground, to);
  }
  return from_images(std::move(images));
}

Permutation Permutation::from_cycles(const std::vector<std::string>& ground,
                                     const std::vector<std::vector<std::string>>& cycles) {
  std::vector<int> images(ground.size());
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(ground.size(), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = label_index(ground, cycle[i]);
      if (used[static_cast<std::size_t>(from)]) {
        throw Error(ErrorKind::NotPermutation, "'" + cycle[i] + "' appears in more than one cycle position");
      }
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = label_index(ground, cycle[(i + 1) % cycle.size()]);
    }
  }
  return from_images(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_cycle_string(const std::vector<std::string>& labels) const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += labels[i];
      first = false;
      i = static_cast<std::size_t>(images_[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Matrix permutation_matrix(const Permutation& sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.size());
  Matrix g = Matrix::Zero(n, n);
  for (Eigen::Index beta = 0; beta < n; ++beta) g(sigma(static_cast<int>(beta)), beta) = 1.0;
  return g;
}

std::optional<Edge> first_broken_edge(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.num_vertices()) {
    throw Error(ErrorKind::GroundMismatch, "permutation acts on " + std::to_string(sigma.size()) +
                                               " points but the graph has " +
                                               std::to_string(g.num_vertices()) + " vertices");
  }
  // A bijection maps |E| distinct pairs to |E| distinct pairs, so checking
  // that every edge lands on an edge is enough for both directions.
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(sigma(e.a), sigma(e.b))) return e;
  }
  return std::nullopt;
}

bool is_automorphism(const Graph& g, const Permutation& sigma) { return !first_broken_edge(g, sigma).has_value(); }

namespace {

void require_automorphisms(const Graph& g, const std::vector<Permutation>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (auto broken = first_broken_edge(g, generators[i])) {
      const auto& v = g.vertices();
      throw Error(ErrorKind::NotAutomorphism,
                  "generator " + std::to_string(i) + " " + generators[i].to_cycle_string(v) + " maps edge " +
                      v[broken->a] + " -- " + v[broken->b] + " to non-edge " + v[generators[i](broken->a)] +
                      " -- " + v[generators[i](broken->b)]);
    }
  }
}

}  // namespace

Partition vertex_orbits(const Graph& g, const std::vector<Permutation>& generators) {
  require_automorphisms(g, generators);
  DisjointSets sets(g.num_vertices());
  for (const auto& sigma : generators)
    for (std::size_t a = 0; a < g.num_vertices(); ++a) sets.unite(static_cast<int>(a), sigma(static_cast<int>(a)));
  return Partition::from_labels(sets.labels());
}

Partition edge_orbits(const Graph& g, const std::vector<Permutation>& generators) {
  require_automorphisms(g, generators);
  DisjointSets sets(g.num_edges());
  for (const auto& sigma : generators) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges()[i];
      sets.unite(static_cast<int>(i), g.edge_index(sigma(e.a), sigma(e.b)));
    }
  }
  return Partition::from_labels(sets.labels());
}

ColoredGraph rcop_coloring(const Graph& g, const std::vector<Permutation>& generators) {
  return ColoredGraph(g, vertex_orbits(g, generators), edge_orbits(g, generators));
}

bool is_group_invariant(const Matrix& k, const Permutation& sigma, double tol) {
  if (k.rows() != k.cols() || static_cast<std::size_t>(k.rows()) != sigma.size()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix and permutation sizes differ");
  }
  const Matrix g = permutation_matrix(sigma);
  return max_abs_diff(g * k * g.transpose(), k) <= tol;
}

}  // namespace symgauss
