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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "symgauss/linalg.hpp"
#include "symgauss/partition.hpp"

namespace symgauss {

// Undirected edge between vertex indices, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  static Edge make(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over string-labelled vertices. Vertex order is the
// input order and indexes every vertex-indexed matrix and vector in the
// library. Edges are kept sorted by (a, b); edge index i refers to edges()[i].
class Graph {
 public:
  Graph() = default;

  // Throws InvalidGraph (duplicate vertex, self-loop, duplicate edge) or
  // UnknownVertex (endpoint not in the vertex list).
  Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  // Throws UnknownVertex.
  int vertex_index(const std::string& label) const;
  // -1 when {u, v} is not an edge.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  std::string edge_label(int edge) const;
  std::vector<std::string> edge_labels() const;

  Matrix adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void build_index();

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  // Dense |V| x |V| lookup of edge ids, -1 for non-edges.
  std::vector<int> edge_id_;
};

enum class ClassKind { Vertex, Edge };

// Graph with a vertex coloring (partition of vertices) and an edge coloring
// (partition of edge indices).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  // Throws GroundMismatch when the colorings do not partition V and E.
  ColoredGraph(Graph graph, Partition vertex_coloring, Partition edge_coloring);

  // Colorings from label blocks; edges in a block are (u, v) label pairs.
  static ColoredGraph from_labels(Graph graph, const std::vector<std::vector<std::string>>& vertex_classes,
                                  const std::vector<std::vector<std::pair<std::string, std::string>>>& edge_classes);

  // Every vertex and every edge in its own class.
  static ColoredGraph uncolored(Graph graph);

  const Graph& graph() const { return graph_; }
  const Partition& vertex_coloring() const { return vertex_coloring_; }
  const Partition& edge_coloring() const { return edge_coloring_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t num_vertex_classes() const { return vertex_coloring_.num_blocks(); }
  std::size_t num_edge_classes() const { return edge_coloring_.num_blocks(); }
  // Vertex classes followed by edge classes; this is the RCON parameter count.
  std::size_t num_classes() const { return num_vertex_classes() + num_edge_classes(); }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  Graph graph_;
  Partition vertex_coloring_;
  Partition edge_coloring_;
};

// The 0/1 matrix T^u of a color class u, indexed by vertex order.
struct GeneratorMatrix {
  Matrix entries;
  ClassKind kind;
  int class_id;
};

// Throws UnknownClass.
GeneratorMatrix generator_matrix(const ColoredGraph& g, ClassKind kind, int class_id);

// All generator matrices: vertex classes in block order, then edge classes.
std::vector<GeneratorMatrix> generator_matrices(const ColoredGraph& g);

// Column j is the 0/1 indicator of block j of m; the columns span the space
// of vectors constant on the blocks of m.
struct MeanSpaceBasis {
  Matrix vectors;
};

MeanSpaceBasis mean_space_basis(const Partition& m);

// Neighbours of `vertex` along edges of the given edge class, ascending.
// Throws UnknownClass or UnknownVertex.
std::vector<int> neighbors_in_class(const ColoredGraph& g, int edge_class_id, int vertex);

}  // namespace symgauss
