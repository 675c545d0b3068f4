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

#include "support.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Cholesky>

#include "symgauss/model_space.hpp"
#include "symgauss/regularity.hpp"

#ifndef SYMGAUSS_DATA_DIR
#error "SYMGAUSS_DATA_DIR must be defined"
#endif

namespace symgauss::testing {

std::string data_path(const std::string& file) { return std::string(SYMGAUSS_DATA_DIR) + "/" + file; }

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

Partition random_partition(Rng& rng, std::size_t n) {
  const auto k = 1 + rng.below(n);
  std::vector<int> labels(n);
  for (auto& l : labels) l = static_cast<int>(rng.below(k));
  return Partition::from_labels(labels);
}

Partition random_coarsening(Rng& rng, const Partition& p) {
  const auto k = 1 + rng.below(p.num_blocks());
  std::vector<int> merged(p.num_blocks());
  for (auto& m : merged) m = static_cast<int>(rng.below(k));
  std::vector<int> labels(p.ground_size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    labels[i] = merged[static_cast<std::size_t>(p.block_of(static_cast<int>(i)))];
  return Partition::from_labels(labels);
}

Graph random_graph(Rng& rng, std::size_t n) {
  const double density = rng.uniform01();
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng.coin(density)) edges.push_back(Edge::make(static_cast<int>(a), static_cast<int>(b)));
  return Graph(vertex_names(n), std::move(edges));
}

namespace {

std::vector<int> random_images(Rng& rng, std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return images;
}

}  // namespace

Graph random_symmetric_graph(Rng& rng, std::size_t n) {
  const auto images = random_images(rng, n);
  const double density = 0.6 * rng.uniform01();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adj[a][b] || !rng.coin(density)) continue;
      // Add the whole orbit of {a, b} under the permutation.
      std::size_t x = a, y = b;
      do {
        adj[x][y] = adj[y][x] = true;
        x = static_cast<std::size_t>(images[x]);
        y = static_cast<std::size_t>(images[y]);
      } while (!(x == a && y == b) && !(x == b && y == a));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (adj[a][b]) edges.push_back(Edge::make(static_cast<int>(a), static_cast<int>(b)));
  return Graph(vertex_names(n), std::move(edges));
}

ColoredGraph random_colored_graph(Rng& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  Graph graph = random_graph(rng, n);
  Partition vc = random_partition(rng, n);
  Partition ec = graph.num_edges() ? random_partition(rng, graph.num_edges()) : Partition::singletons(0);
  return ColoredGraph(std::move(graph), std::move(vc), std::move(ec));
}

ColoredGraph mixed_colored_graph(Rng& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  switch (rng.below(4)) {
    case 0: {
      Graph graph = random_symmetric_graph(rng, n);
      const auto auts = n <= 7 ? automorphisms_serial(graph) : std::vector<Permutation>{};
      return rcop_coloring(graph, pick_generators(rng, auts, 3));
    }
    case 1: {
      // Coarse vertex colors, few edge colors, then refined to regularity.
      Graph graph = random_graph(rng, n);
      Partition ec = graph.num_edges() ? random_coarsening(rng, Partition::singletons(graph.num_edges()))
                                       : Partition::singletons(0);
      Partition vc = refine_until_regular(graph, random_coarsening(rng, Partition::whole(n)), ec);
      return ColoredGraph(std::move(graph), std::move(vc), std::move(ec));
    }
    default:
      return random_colored_graph(rng, n, n);
  }
}

Partition mixed_mean_partition(Rng& rng, const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  switch (rng.below(5)) {
    case 0:
      return Partition::singletons(n);
    case 1:
      return coarsest_regular_refinement(g);
    case 2: {
      const auto valid = enumerate_valid_partitions(g);
      return valid[rng.below(valid.size())];
    }
    case 3:
      return random_coarsening(rng, g.vertex_coloring());
    default:
      return random_partition(rng, n);
  }
}

namespace {

std::vector<std::vector<int>> all_image_vectors(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

std::vector<Permutation> automorphisms_serial(const Graph& g) {
  std::vector<Permutation> out;
  for (auto& images : all_image_vectors(g.num_vertices())) {
    auto sigma = Permutation::from_images(std::move(images));
    if (is_automorphism(g, sigma)) out.push_back(std::move(sigma));
  }
  return out;
}

std::vector<Permutation> automorphisms_parallel(const Graph& g) {
  const auto candidates = all_image_vectors(g.num_vertices());
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& images = candidates[static_cast<std::size_t>(i)];
    keep[static_cast<std::size_t>(i)] = is_automorphism(g, Permutation::from_images(images)) ? 1 : 0;
  }
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(Permutation::from_images(candidates[i]));
  return out;
}

std::vector<Permutation> pick_generators(Rng& rng, const std::vector<Permutation>& auts, int max_count) {
  std::vector<Permutation> nontrivial;
  for (const auto& s : auts)
    if (!s.is_identity()) nontrivial.push_back(s);
  std::vector<Permutation> out;
  if (nontrivial.empty()) return out;
  const auto count = rng.below(static_cast<std::uint64_t>(max_count) + 1);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(nontrivial[rng.below(nontrivial.size())]);
  return out;
}

Matrix gaussian_rows(Rng& rng, const Vector& mu, const Matrix& k, std::size_t n) {
  // With K = L L^T, x = L^{-T} z has covariance K^{-1}.
  const Eigen::LLT<Matrix> llt(k);
  const Matrix lt = llt.matrixU();
  Matrix rows(static_cast<Eigen::Index>(n), mu.size());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Vector z(mu.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = rng.normal();
    rows.row(i) = (mu + lt.triangularView<Eigen::Upper>().solve(z)).transpose();
  }
  return rows;
}

Dataset simulate_dataset(Rng& rng, const ColoredGraph& g, const Partition& m, std::size_t n) {
  Vector mu(static_cast<Eigen::Index>(g.num_vertices()));
  std::vector<double> level(m.num_blocks());
  for (auto& l : level) l = rng.uniform(-5, 5);
  for (Eigen::Index a = 0; a < mu.size(); ++a) mu(a) = level[static_cast<std::size_t>(m.block_of(static_cast<int>(a)))];
  const auto k = sample_rcon(g, rng.below(1u << 30));
  return Dataset(g.graph().vertices(), gaussian_rows(rng, mu, k.k, n));
}

Dataset behrens_fisher_data() {
  Rng rng(2024);
  Matrix rows(30, 2);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    rows(i, 0) = rng.normal();
    rows(i, 1) = 3.0 + 10.0 * rng.normal();
  }
  return Dataset({"x", "y"}, rows);
}

ModelSpec spec_from(const ColoredGraph& g, const std::optional<Partition>& mean) {
  const auto& graph = g.graph();
  const auto& v = graph.vertices();
  auto label_blocks = [&](const Partition& p) {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : p.blocks()) {
      auto& block = out.emplace_back();
      for (int x : b) block.push_back(v[static_cast<std::size_t>(x)]);
    }
    return out;
  };
  auto edge_pair = [&](int e) {
    const Edge& ed = graph.edges()[static_cast<std::size_t>(e)];
    return std::pair{v[static_cast<std::size_t>(ed.a)], v[static_cast<std::size_t>(ed.b)]};
  };
  ModelSpec spec;
  spec.vertices = v;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) spec.edges.push_back(edge_pair(static_cast<int>(e)));
  spec.vertex_classes = label_blocks(g.vertex_coloring());
  std::vector<std::vector<std::pair<std::string, std::string>>> ec;
  for (const auto& b : g.edge_coloring().blocks()) {
    auto& cls = ec.emplace_back();
    for (int e : b) cls.push_back(edge_pair(e));
  }
  spec.edge_classes = std::move(ec);
  if (mean) spec.mean_partition = label_blocks(*mean);
  return spec;
}

}  // namespace symgauss::testing
