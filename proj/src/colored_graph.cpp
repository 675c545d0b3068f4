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

#include "symgauss/colored_graph.hpp"

#include <algorithm>
#include <set>

#include "symgauss/error.hpp"

namespace symgauss {

namespace {

int find_vertex(const std::vector<std::string>& vertices, const std::string& label) {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) throw Error(ErrorKind::UnknownVertex, "'" + label + "' is not a vertex");
  return static_cast<int>(it - vertices.begin());
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    const int iu = find_vertex(vertices_, u);
    const int iv = find_vertex(vertices_, v);
    if (iu == iv) throw Error(ErrorKind::InvalidGraph, "self-loop at '" + u + "'");
    edges_.push_back(Edge::make(iu, iv));
  }
  build_index();
}

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    const int n = static_cast<int>(vertices_.size());
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) {
      throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    }
    if (e.a == e.b) throw Error(ErrorKind::InvalidGraph, "self-loop at '" + vertices_[e.a] + "'");
    e = Edge::make(e.a, e.b);
  }
  build_index();
}

void Graph::build_index() {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidGraph, "duplicate vertex '" + v + "'");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::InvalidGraph, "duplicate edge " + vertices_[dup->a] + " -- " + vertices_[dup->b]);
  }
  const std::size_t n = vertices_.size();
  edge_id_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    edge_id_[static_cast<std::size_t>(a) * n + b] = static_cast<int>(i);
    edge_id_[static_cast<std::size_t>(b) * n + a] = static_cast<int>(i);
  }
}

int Graph::vertex_index(const std::string& label) const { return find_vertex(vertices_, label); }

int Graph::edge_index(int u, int v) const {
  const std::size_t n = vertices_.size();
  return edge_id_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
}

std::string Graph::edge_label(int edge) const {
  const Edge& e = edges_[static_cast<std::size_t>(edge)];
  return vertices_[e.a] + "--" + vertices_[e.b];
}

std::vector<std::string> Graph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back(edge_label(static_cast<int>(i)));
  return out;
}

Matrix Graph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(vertices_.size());
  Matrix adj = Matrix::Zero(n, n);
  for (const auto& e : edges_) {
    adj(e.a, e.b) = 1.0;
    adj(e.b, e.a) = 1.0;
  }
  return adj;
}

ColoredGraph::ColoredGraph(Graph graph, Partition vertex_coloring, Partition edge_coloring)
    : graph_(std::move(graph)),
      vertex_coloring_(std::move(vertex_coloring)),
      edge_coloring_(std::move(edge_coloring)) {
  if (vertex_coloring_.ground_size() != graph_.num_vertices()) {
    throw Error(ErrorKind::GroundMismatch, "vertex coloring does not cover the vertex set");
  }
  if (edge_coloring_.ground_size() != graph_.num_edges()) {
    throw Error(ErrorKind::GroundMismatch, "edge coloring does not cover the edge set");
  }
}

ColoredGraph ColoredGraph::from_labels(
    Graph graph, const std::vector<std::vector<std::string>>& vertex_classes,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& edge_classes) {
  Partition vc = make_partition(graph.vertices(), vertex_classes);
  std::vector<std::vector<int>> blocks;
  for (const auto& cls : edge_classes) {
    auto& block = blocks.emplace_back();
    for (const auto& [u, v] : cls) {
      const int id = graph.edge_index(graph.vertex_index(u), graph.vertex_index(v));
      if (id < 0) throw Error(ErrorKind::UnknownElement, u + " -- " + v + " is not an edge");
      block.push_back(id);
    }
  }
  Partition ec = Partition::from_blocks(graph.num_edges(), std::move(blocks));
  return ColoredGraph(std::move(graph), std::move(vc), std::move(ec));
}

ColoredGraph ColoredGraph::uncolored(Graph graph) {
  auto vc = Partition::singletons(graph.num_vertices());
  auto ec = Partition::singletons(graph.num_edges());
  return ColoredGraph(std::move(graph), std::move(vc), std::move(ec));
}

GeneratorMatrix generator_matrix(const ColoredGraph& g, ClassKind kind, int class_id) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  const Partition& part = kind == ClassKind::Vertex ? g.vertex_coloring() : g.edge_coloring();
  if (class_id < 0 || static_cast<std::size_t>(class_id) >= part.num_blocks()) {
    throw Error(ErrorKind::UnknownClass, std::string(kind == ClassKind::Vertex ? "vertex" : "edge") +
                                             " class " + std::to_string(class_id) + " does not exist");
  }
  Matrix t = Matrix::Zero(n, n);
  for (int e : part.block(static_cast<std::size_t>(class_id))) {
    if (kind == ClassKind::Vertex) {
      t(e, e) = 1.0;
    } else {
      const Edge& edge = g.graph().edges()[static_cast<std::size_t>(e)];
      t(edge.a, edge.b) = 1.0;
      t(edge.b, edge.a) = 1.0;
    }
  }
  return {std::move(t), kind, class_id};
}

std::vector<GeneratorMatrix> generator_matrices(const ColoredGraph& g) {
  std::vector<GeneratorMatrix> out;
  out.reserve(g.num_classes());
  for (std::size_t i = 0; i < g.num_vertex_classes(); ++i)
    out.push_back(generator_matrix(g, ClassKind::Vertex, static_cast<int>(i)));
  for (std::size_t i = 0; i < g.num_edge_classes(); ++i)
    out.push_back(generator_matrix(g, ClassKind::Edge, static_cast<int>(i)));
  return out;
}

MeanSpaceBasis mean_space_basis(const Partition& m) {
  Matrix b = Matrix::Zero(static_cast<Eigen::Index>(m.ground_size()), static_cast<Eigen::Index>(m.num_blocks()));
  for (std::size_t j = 0; j < m.num_blocks(); ++j)
    for (int e : m.block(j)) b(e, static_cast<Eigen::Index>(j)) = 1.0;
  return {std::move(b)};
}

std::vector<int> neighbors_in_class(const ColoredGraph& g, int edge_class_id, int vertex) {
  if (edge_class_id < 0 || static_cast<std::size_t>(edge_class_id) >= g.num_edge_classes()) {
    throw Error(ErrorKind::UnknownClass, "edge class " + std::to_string(edge_class_id) + " does not exist");
  }
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= g.num_vertices()) {
    throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(vertex) + " out of range");
  }
  std::vector<int> out;
  for (int e : g.edge_coloring().block(static_cast<std::size_t>(edge_class_id))) {
    const Edge& edge = g.graph().edges()[static_cast<std::size_t>(e)];
    if (edge.a == vertex) out.push_back(edge.b);
    if (edge.b == vertex) out.push_back(edge.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symgauss
