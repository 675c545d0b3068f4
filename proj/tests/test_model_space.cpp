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

#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "symgauss/error.hpp"
#include "symgauss/model_space.hpp"
#include "symgauss/rcop.hpp"
#include "symgauss/regularity.hpp"

using namespace symgauss;

namespace {

const std::vector<std::string> kFretsV = {"B1", "B2", "L1", "L2"};

ColoredGraph frets() {
  Graph g(kFretsV, {{"B1", "L1"}, {"B2", "L2"}, {"B1", "B2"}, {"L1", "L2"}});
  return ColoredGraph::from_labels(std::move(g), {{"B1", "B2"}, {"L1", "L2"}},
                                   {{{"B1", "L1"}, {"B2", "L2"}}, {{"B1", "B2"}}, {{"L1", "L2"}}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

// Vertex colorings x edge colorings of the path on `n` vertices, in
// restricted-growth order.
std::vector<ColoredGraph> path_colorings(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(Edge::make(static_cast<int>(i), static_cast<int>(i + 1)));
  const Graph path(testing::vertex_names(n), edges);
  std::vector<ColoredGraph> out;
  for_each_restricted_growth_string(n, [&](std::span<const int> vl) {
    for_each_restricted_growth_string(n - 1, [&](std::span<const int> el) {
      out.emplace_back(path, Partition::from_labels(vl), Partition::from_labels(el));
      return true;
    });
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("model_space") {

TEST_CASE("assemble_rcon examples") {
  const auto g = frets();
  CHECK(assemble_rcon(g, {{1, 1}, {0, 0, 0}}).k == Matrix::Identity(4, 4));
  const auto k = assemble_rcon(g, {{2, 1}, {0.1, 0.05, 0.02}}).k;
  CHECK(k(0, 0) == 2);
  CHECK(k(1, 1) == 2);
  CHECK(k(2, 2) == 1);
  CHECK(k(0, 3) == 0);
  CHECK(kind_of([&] { assemble_rcon(g, {{1, 1}, {10, 10, 10}}); }) == ErrorKind::NotPositiveDefinite);
  CHECK(kind_of([&] { assemble_rcon(g, {{1, 1}, {0, 0}}); }) == ErrorKind::MissingParameter);
}

TEST_CASE("assemble_rcor examples") {
  const auto g = frets();
  CHECK(assemble_rcor(g, {{1, 1}, {0, 0, 0}}).k == Matrix::Identity(4, 4));
  const int rung = g.edge_coloring().block_of(g.graph().edge_index(0, 2));
  RcorParameters p{{1.5, 0.7}, {0.2, 0.1, 0.3}};
  const auto k = assemble_rcor(g, p).k;
  CHECK(k(0, 2) == doctest::Approx(p.c[static_cast<std::size_t>(rung)] * 1.5 * 0.7));
  CHECK(k(0, 0) == doctest::Approx(1.5 * 1.5));

  const ColoredGraph star(Graph({"h", "x", "y", "z"}, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}),
                          Partition::singletons(4), Partition::singletons(3));
  CHECK_NOTHROW(assemble_rcor(star, {{1, 1, 1, 1}, {0.5, 0.5, 0.5}}));
  CHECK(kind_of([&] { assemble_rcor(star, {{1, 1, 1, 1}, {0.6, 0.6, 0.6}}); }) == ErrorKind::NotPositiveDefinite);
  CHECK(kind_of([&] { assemble_rcor(star, {{1, 0, 1, 1}, {0, 0, 0}}); }) == ErrorKind::ValidationError);
  CHECK(kind_of([&] { assemble_rcor(star, {{1, 1, 1}, {0, 0, 0}}); }) == ErrorKind::MissingParameter);
}

TEST_CASE("rcon membership") {
  const auto g = frets();
  const auto k = assemble_rcon(g, {{2, 1}, {0.1, 0.05, 0.02}}).k;
  CHECK(is_member_rcon(k, g));
  CHECK(is_member_rcon(Matrix::Identity(4, 4), g));
  Matrix bad = k;
  bad(0, 0) += 10 * kMembershipTolerance;
  CHECK_FALSE(is_member_rcon(bad, g));
  bad = k;
  bad(0, 3) = bad(3, 0) = 1e-3;
  CHECK_FALSE(is_member_rcon(bad, g));
  CHECK_THROWS_AS(is_member_rcon(Matrix::Identity(3, 3), g), Error);
}

TEST_CASE("rcor membership") {
  const auto g = frets();
  CHECK(is_member_rcor(assemble_rcor(g, {{1.5, 0.7}, {0.2, 0.1, 0.3}}).k, g));
  Matrix d = Matrix::Identity(4, 4);
  d.diagonal() << 3, 3, 0.5, 0.5;
  CHECK(is_member_rcor(d, g));
  d(2, 2) = 0.6;
  CHECK_FALSE(is_member_rcor(d, g));
  CHECK(kind_of([&] { is_member_rcor(-Matrix::Identity(4, 4), g); }) == ErrorKind::NotPositiveDefinite);
}

TEST_CASE("samplers are deterministic and land in their spaces") {
  const auto g = frets();
  CHECK(sample_rcon(g, 9).k == sample_rcon(g, 9).k);
  CHECK(sample_rcor(g, 9).k == sample_rcor(g, 9).k);
  CHECK(sample_rcon(g, 9).k != sample_rcon(g, 10).k);
  const auto sigma = Permutation::from_cycles(kFretsV, {{"B1", "B2"}, {"L1", "L2"}});
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto k = sample_rcon(g, s);
    CHECK(is_member_rcon(k.k, g));
    CHECK(is_group_invariant(k.k, sigma));
    CHECK(is_member_rcor(sample_rcor(g, s).k, g));
  }
  const ColoredGraph diag(Graph({"a", "b", "c"}, std::vector<Edge>{}), Partition::from_blocks(3, {{0, 2}, {1}}),
                          Partition::singletons(0));
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(is_member_rcor(sample_rcor(diag, s).k, diag));
}

TEST_CASE("random samples are members on random colorings") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_colored_graph(rng, 1, 8);
    const auto seed = rng.below(1u << 30);
    CHECK(is_member_rcon(sample_rcon(g, seed).k, g));
    CHECK(is_member_rcor(sample_rcor_any(g, seed).k, g));
    CHECK(is_member_rcor(sample_rcor_dominant(g, seed).k, g));
  }
}

TEST_CASE("dense graphs exhaust the rejection sampler") {
  std::vector<Edge> edges;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) edges.push_back(Edge::make(a, b));
  const ColoredGraph complete(Graph(testing::vertex_names(8), edges), Partition::singletons(8),
                              Partition::singletons(28));
  CHECK(kind_of([&] { sample_rcor(complete, 1); }) == ErrorKind::SamplingExhausted);
  CHECK(is_member_rcor(sample_rcor_any(complete, 1).k, complete));
}

TEST_CASE("rcon and rcor coincide on edge-regular colorings") {
  Rng rng(42);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 100; ++i) {
    const auto g = testing::mixed_colored_graph(rng, 1, 6);
    if (!is_edge_regular(g).holds) continue;
    ++checked;
    const auto seed = rng.below(1u << 30);
    const auto con = sample_rcon(g, seed);
    const auto cor = sample_rcor_any(g, seed);
    CHECK(is_member_rcor(con.k, g));
    CHECK(is_member_rcon(cor.k, g));

    // Same matrix through the two parameterizations.
    const auto& rp = std::get<RcorParameters>(cor.source);
    RconParameters theta;
    for (double a : rp.a) theta.vertex_theta.push_back(a * a);
    for (std::size_t u = 0; u < g.num_edge_classes(); ++u) {
      const Edge& e = g.graph().edges()[static_cast<std::size_t>(g.edge_coloring().block(u).front())];
      const double aa = rp.a[static_cast<std::size_t>(g.vertex_coloring().block_of(e.a))];
      const double ab = rp.a[static_cast<std::size_t>(g.vertex_coloring().block_of(e.b))];
      theta.edge_theta.push_back(rp.c[u] * aa * ab);
    }
    CHECK(max_abs_diff(assemble_rcon(g, theta).k, cor.k) < 1e-12);
  }
  CHECK(checked >= 50);
}

TEST_CASE("a non-edge-regular path coloring separates rcor from rcon") {
  // Search the 3- and 4-vertex paths for the first non-edge-regular coloring
  // on which an RCOR sample leaves the RCON space.
  std::optional<ColoredGraph> found;
  for (std::size_t n : {3u, 4u}) {
    for (const auto& g : path_colorings(n)) {
      if (is_edge_regular(g).holds) continue;
      if (!is_member_rcon(sample_rcor(g, 1).k, g)) {
        found = g;
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found.has_value());
  CHECK_FALSE(is_edge_regular(*found).holds);
  // Path a-b-c, vertex classes {v0,v1}{v2}, one edge class.
  CHECK(found->num_vertices() == 3);
  CHECK(found->vertex_coloring() == Partition::from_blocks(3, {{0, 1}, {2}}));
  CHECK(found->edge_coloring() == Partition::whole(2));
}

TEST_CASE("kruskal oracle examples") {
  const auto g = frets();
  CHECK(kruskal_invariance_oracle(g, g.vertex_coloring(), 20, 1));
  CHECK_FALSE(kruskal_invariance_oracle(g, make_partition(kFretsV, {{"B1", "B2"}, {"L1"}, {"L2"}}), 20, 1));
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto h = testing::random_colored_graph(rng, 1, 8);
    CHECK(kruskal_invariance_oracle(h, Partition::singletons(h.num_vertices()), 5, i));
  }
}

TEST_CASE("sampled and exact invariance checks agree with the combinatorial verdict") {
  Rng rng(44);
  int positives = 0;
  for (int i = 0; i < 150; ++i) {
    const auto g = testing::mixed_colored_graph(rng, 1, 7);
    const auto m = testing::mixed_mean_partition(rng, g);
    const auto r = kruskal_invariance_check(g, m, 20, rng.below(1u << 30));
    const bool verdict = mean_mle_equals_ls(g, m).holds;
    CHECK(r.sampled_rcon == verdict);
    CHECK(r.sampled_rcor == verdict);
    CHECK(r.generators == verdict);
    positives += verdict ? 1 : 0;
  }
  CHECK(positives > 20);
  CHECK(positives < 130);
}

}  // TEST_SUITE
