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

#include "symgauss/regularity.hpp"

#include <algorithm>
#include <map>

#include "symgauss/error.hpp"
#include "symgauss/kernels.hpp"

namespace symgauss {

namespace {

std::pair<int, int> unordered(int x, int y) { return x < y ? std::pair{x, y} : std::pair{y, x}; }

// counts[alpha * B + w] = |ne(alpha) ∩ block w| over the given edges.
std::vector<int> neighbor_counts(std::size_t n, const Partition& p, std::span<const Edge> edges,
                                 std::span<const int> edge_ids) {
  const std::size_t nb = p.num_blocks();
  std::vector<int> counts(n * nb, 0);
  for (int id : edge_ids) {
    const Edge& e = edges[static_cast<std::size_t>(id)];
    ++counts[static_cast<std::size_t>(e.a) * nb + static_cast<std::size_t>(p.block_of(e.b))];
    ++counts[static_cast<std::size_t>(e.b) * nb + static_cast<std::size_t>(p.block_of(e.a))];
  }
  return counts;
}

// First equitability violation of p along the given edges, if any.
std::optional<Witness> first_inequity(std::size_t n, const Partition& p, std::span<const Edge> edges,
                                      std::span<const int> edge_ids, int edge_class) {
  const std::size_t nb = p.num_blocks();
  const auto counts = neighbor_counts(n, p, edges, edge_ids);
  for (const auto& block : p.blocks()) {
    const auto ref = static_cast<std::size_t>(block.front());
    for (std::size_t i = 1; i < block.size(); ++i) {
      const auto other = static_cast<std::size_t>(block[i]);
      for (std::size_t w = 0; w < nb; ++w) {
        if (counts[ref * nb + w] != counts[other * nb + w]) {
          Witness wit;
          wit.kind = Witness::Kind::NeighborCount;
          wit.edge_class = edge_class;
          wit.first = static_cast<int>(ref);
          wit.second = static_cast<int>(other);
          wit.target_block = static_cast<int>(w);
          wit.first_count = counts[ref * nb + w];
          wit.second_count = counts[other * nb + w];
          return wit;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string describe(const Witness& w, const ColoredGraph& g, const Partition& tested) {
  const auto& v = g.graph().vertices();
  switch (w.kind) {
    case Witness::Kind::EdgeEndpoints:
      return "edge class " + std::to_string(w.edge_class) + ": " + g.graph().edge_label(w.first) +
             " joins vertex classes (" + std::to_string(w.first_classes.first) + "," +
             std::to_string(w.first_classes.second) + ") but " + g.graph().edge_label(w.second) + " joins (" +
             std::to_string(w.second_classes.first) + "," + std::to_string(w.second_classes.second) + ")";
    case Witness::Kind::NeighborCount: {
      std::string block = "{";
      const auto& members = tested.block(static_cast<std::size_t>(w.target_block));
      for (std::size_t i = 0; i < members.size(); ++i) block += (i ? "," : "") + v[members[i]];
      block += "}";
      return "edge class " + std::to_string(w.edge_class) + ": " + v[w.first] + " has " +
             std::to_string(w.first_count) + " neighbour(s) in " + block + " but " + v[w.second] + " has " +
             std::to_string(w.second_count);
    }
    case Witness::Kind::NotFiner:
      return v[w.first] + " and " + v[w.second] + " share a mean block but have different vertex colors";
  }
  return {};
}

RegularityCheck is_edge_regular(const ColoredGraph& g) {
  const auto& edges = g.graph().edges();
  const auto& vc = g.vertex_coloring();
  for (std::size_t u = 0; u < g.num_edge_classes(); ++u) {
    const auto& block = g.edge_coloring().block(u);
    const Edge& ref = edges[static_cast<std::size_t>(block.front())];
    const auto ref_classes = unordered(vc.block_of(ref.a), vc.block_of(ref.b));
    for (std::size_t i = 1; i < block.size(); ++i) {
      const Edge& e = edges[static_cast<std::size_t>(block[i])];
      const auto classes = unordered(vc.block_of(e.a), vc.block_of(e.b));
      if (classes != ref_classes) {
        Witness w;
        w.kind = Witness::Kind::EdgeEndpoints;
        w.edge_class = static_cast<int>(u);
        w.first = block.front();
        w.second = block[i];
        w.first_classes = ref_classes;
        w.second_classes = classes;
        return {false, {w}};
      }
    }
  }
  return {};
}

bool is_equitable(const Partition& m, std::span<const Edge> edges) {
  const std::size_t n = m.ground_size();
  std::vector<int> ids(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= n || static_cast<std::size_t>(e.b) >= n) {
      throw Error(ErrorKind::GroundMismatch, "edge endpoint outside the partitioned vertex set");
    }
    ids[i] = static_cast<int>(i);
  }
  return !first_inequity(n, m, edges, ids, -1).has_value();
}

RegularityCheck is_vertex_regular(const Graph& graph, const Partition& vertex_partition,
                                  const Partition& edge_coloring) {
  if (vertex_partition.ground_size() != graph.num_vertices()) {
    throw Error(ErrorKind::GroundMismatch, "vertex partition does not cover the vertex set");
  }
  if (edge_coloring.ground_size() != graph.num_edges()) {
    throw Error(ErrorKind::GroundMismatch, "edge coloring does not cover the edge set");
  }
  for (std::size_t u = 0; u < edge_coloring.num_blocks(); ++u) {
    if (auto w = first_inequity(graph.num_vertices(), vertex_partition, graph.edges(), edge_coloring.block(u),
                                static_cast<int>(u))) {
      return {false, {*w}};
    }
  }
  return {};
}

RegularityCheck is_vertex_regular(const ColoredGraph& g) {
  return is_vertex_regular(g.graph(), g.vertex_coloring(), g.edge_coloring());
}

RegularityReport regularity_report(const ColoredGraph& g) {
  RegularityReport report;
  auto edge = is_edge_regular(g);
  auto vertex = is_vertex_regular(g);
  report.edge_regular = edge.holds;
  report.vertex_regular = vertex.holds;
  report.witnesses = std::move(edge.witnesses);
  report.witnesses.insert(report.witnesses.end(), vertex.witnesses.begin(), vertex.witnesses.end());
  return report;
}

EstimabilityVerdict mean_mle_equals_ls(const ColoredGraph& g, const Partition& m) {
  if (m.ground_size() != g.num_vertices()) {
    throw Error(ErrorKind::GroundMismatch, "mean partition does not cover the vertex set");
  }
  EstimabilityVerdict verdict;
  const auto& vc = g.vertex_coloring();
  for (const auto& block : m.blocks()) {
    const int color = vc.block_of(block.front());
    auto it = std::find_if(block.begin(), block.end(), [&](int v) { return vc.block_of(v) != color; });
    if (it != block.end()) {
      verdict.finer_ok = false;
      Witness w;
      w.kind = Witness::Kind::NotFiner;
      w.first = block.front();
      w.second = *it;
      verdict.witnesses.push_back(w);
      break;
    }
  }
  auto regular = is_vertex_regular(g.graph(), m, g.edge_coloring());
  verdict.vertex_regular_ok = regular.holds;
  verdict.witnesses.insert(verdict.witnesses.end(), regular.witnesses.begin(), regular.witnesses.end());
  verdict.holds = verdict.finer_ok && verdict.vertex_regular_ok;
  return verdict;
}

Partition refine_until_regular(const Graph& graph, const Partition& start, const Partition& edge_coloring) {
  const std::size_t n = graph.num_vertices();
  const std::size_t num_classes = edge_coloring.num_blocks();
  Partition current = start;
  while (true) {
    const std::size_t nb = current.num_blocks();
    // signature[alpha] = (block, counts for every (edge class, block)).
    std::vector<std::vector<int>> signature(n);
    for (std::size_t a = 0; a < n; ++a) {
      signature[a].assign(1 + num_classes * nb, 0);
      signature[a][0] = current.block_of(static_cast<int>(a));
    }
    for (std::size_t u = 0; u < num_classes; ++u) {
      for (int id : edge_coloring.block(u)) {
        const Edge& e = graph.edges()[static_cast<std::size_t>(id)];
        ++signature[static_cast<std::size_t>(e.a)][1 + u * nb + static_cast<std::size_t>(current.block_of(e.b))];
        ++signature[static_cast<std::size_t>(e.b)][1 + u * nb + static_cast<std::size_t>(current.block_of(e.a))];
      }
    }
    std::map<std::vector<int>, int> ids;
    std::vector<int> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = ids.try_emplace(signature[a], static_cast<int>(ids.size())).first->second;
    }
    Partition next = Partition::from_labels(labels);
    // Splitting never merges, so an unchanged block count is the fixpoint.
    if (next.num_blocks() == nb) return next;
    current = std::move(next);
  }
}

Partition coarsest_regular_refinement(const ColoredGraph& g) {
  return refine_until_regular(g.graph(), g.vertex_coloring(), g.edge_coloring());
}

std::vector<Partition> enumerate_valid_partitions(const ColoredGraph& g, std::size_t max_ground_size) {
  return kernels::enumerate_valid_partitions_parallel(g, max_ground_size);
}

}  // namespace symgauss
