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

#include "symgauss/model_space.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "symgauss/error.hpp"
#include "symgauss/kernels.hpp"
#include "symgauss/rng.hpp"

namespace symgauss {

std::vector<double> RconParameters::flat() const {
  std::vector<double> out(vertex_theta);
  out.insert(out.end(), edge_theta.begin(), edge_theta.end());
  return out;
}

RconParameters RconParameters::from_flat(const ColoredGraph& g, std::span<const double> theta) {
  if (theta.size() != g.num_classes()) {
    throw Error(ErrorKind::MissingParameter, "expected " + std::to_string(g.num_classes()) + " parameters, got " +
                                                 std::to_string(theta.size()));
  }
  const auto nv = static_cast<std::ptrdiff_t>(g.num_vertex_classes());
  return {std::vector<double>(theta.begin(), theta.begin() + nv), std::vector<double>(theta.begin() + nv, theta.end())};
}

namespace {

void require_square(const Matrix& k, const ColoredGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  if (k.rows() != n || k.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "matrix is " + std::to_string(k.rows()) + "x" +
                                                  std::to_string(k.cols()) + ", graph has " + std::to_string(n) +
                                                  " vertices");
  }
}

Matrix rcon_matrix(const ColoredGraph& g, const RconParameters& p) {
  if (p.vertex_theta.size() != g.num_vertex_classes() || p.edge_theta.size() != g.num_edge_classes()) {
    throw Error(ErrorKind::MissingParameter, "parameter vector does not match the color classes");
  }
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Matrix k = Matrix::Zero(n, n);
  const auto& vc = g.vertex_coloring();
  for (Eigen::Index a = 0; a < n; ++a) k(a, a) = p.vertex_theta[static_cast<std::size_t>(vc.block_of(static_cast<int>(a)))];
  const auto& edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double v = p.edge_theta[static_cast<std::size_t>(g.edge_coloring().block_of(static_cast<int>(i)))];
    k(edges[i].a, edges[i].b) = v;
    k(edges[i].b, edges[i].a) = v;
  }
  return k;
}

Matrix rcor_matrix(const ColoredGraph& g, const RcorParameters& p) {
  if (p.a.size() != g.num_vertex_classes() || p.c.size() != g.num_edge_classes()) {
    throw Error(ErrorKind::MissingParameter, "parameter vector does not match the color classes");
  }
  for (double a : p.a) {
    if (!(a > 0.0)) throw Error(ErrorKind::ValidationError, "inverse partial standard deviations must be positive");
  }
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Vector scale(n);
  for (Eigen::Index a = 0; a < n; ++a) scale(a) = p.a[static_cast<std::size_t>(g.vertex_coloring().block_of(static_cast<int>(a)))];
  Matrix c = Matrix::Identity(n, n);
  const auto& edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double v = p.c[static_cast<std::size_t>(g.edge_coloring().block_of(static_cast<int>(i)))];
    c(edges[i].a, edges[i].b) = v;
    c(edges[i].b, edges[i].a) = v;
  }
  return scale.asDiagonal() * c * scale.asDiagonal();
}

bool class_equal(const Matrix& k, const ColoredGraph& g, double tol) {
  const auto& vc = g.vertex_coloring();
  for (const auto& block : vc.blocks()) {
    const double ref = k(block.front(), block.front());
    for (int a : block)
      if (std::abs(k(a, a) - ref) > tol) return false;
  }
  return true;
}

bool off_graph_zero(const Matrix& k, const ColoredGraph& g, double tol) {
  for (Eigen::Index a = 0; a < k.rows(); ++a)
    for (Eigen::Index b = a + 1; b < k.cols(); ++b)
      if (!g.graph().has_edge(static_cast<int>(a), static_cast<int>(b)) && std::abs(k(a, b)) > tol) return false;
  return true;
}

bool symmetric(const Matrix& k, double tol) { return max_abs_diff(k, k.transpose()) <= tol; }

std::vector<double> uniform_draws(Rng& rng, std::size_t count, double lo, double hi) {
  std::vector<double> out(count);
  for (auto& x : out) x = rng.uniform(lo, hi);
  return out;
}

}  // namespace

ConcentrationPoint assemble_rcon(const ColoredGraph& g, const RconParameters& p) {
  Matrix k = rcon_matrix(g, p);
  if (!is_positive_definite(k)) throw Error(ErrorKind::NotPositiveDefinite, "assembled RCON matrix");
  return {std::move(k), SpaceTag::Rcon, p};
}

ConcentrationPoint assemble_rcor(const ColoredGraph& g, const RcorParameters& p) {
  Matrix k = rcor_matrix(g, p);
  if (!is_positive_definite(k)) throw Error(ErrorKind::NotPositiveDefinite, "assembled RCOR matrix");
  return {std::move(k), SpaceTag::Rcor, p};
}

bool is_member_rcon(const Matrix& k, const ColoredGraph& g, double tol) {
  require_square(k, g);
  if (!symmetric(k, tol) || !class_equal(k, g, tol) || !off_graph_zero(k, g, tol)) return false;
  const auto& edges = g.graph().edges();
  for (const auto& block : g.edge_coloring().blocks()) {
    const Edge& ref = edges[static_cast<std::size_t>(block.front())];
    for (int id : block) {
      const Edge& e = edges[static_cast<std::size_t>(id)];
      if (std::abs(k(e.a, e.b) - k(ref.a, ref.b)) > tol) return false;
    }
  }
  return is_positive_definite(k);
}

bool is_member_rcor(const Matrix& k, const ColoredGraph& g, double tol) {
  require_square(k, g);
  if (!is_positive_definite(k)) throw Error(ErrorKind::NotPositiveDefinite, "RCOR membership needs a PD matrix");
  if (!symmetric(k, tol) || !class_equal(k, g, tol) || !off_graph_zero(k, g, tol)) return false;
  auto partial_corr = [&](const Edge& e) { return -k(e.a, e.b) / std::sqrt(k(e.a, e.a) * k(e.b, e.b)); };
  const auto& edges = g.graph().edges();
  for (const auto& block : g.edge_coloring().blocks()) {
    const double ref = partial_corr(edges[static_cast<std::size_t>(block.front())]);
    for (int id : block)
      if (std::abs(partial_corr(edges[static_cast<std::size_t>(id)]) - ref) > tol) return false;
  }
  return true;
}

ConcentrationPoint sample_rcon(const ColoredGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  RconParameters p;
  p.vertex_theta = uniform_draws(rng, g.num_vertex_classes(), -1.0, 1.0);
  p.edge_theta = uniform_draws(rng, g.num_edge_classes(), -1.0, 1.0);
  if (g.num_vertices() > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rcon_matrix(g, p), Eigen::EigenvaluesOnly);
    // Every vertex lies in exactly one vertex class, so this adds delta * I.
    const double delta = std::abs(eig.eigenvalues().minCoeff()) + 1.0;
    for (double& t : p.vertex_theta) t += delta;
  }
  return assemble_rcon(g, p);
}

ConcentrationPoint sample_rcor(const ColoredGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kRcorMaxTries; ++attempt) {
    RcorParameters p;
    p.a = uniform_draws(rng, g.num_vertex_classes(), 0.5, 2.0);
    p.c = uniform_draws(rng, g.num_edge_classes(), -1.0, 1.0);
    Matrix k = rcor_matrix(g, p);
    if (is_positive_definite(k)) return {std::move(k), SpaceTag::Rcor, std::move(p)};
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no positive definite RCOR draw in " + std::to_string(kRcorMaxTries) + " attempts");
}

ConcentrationPoint sample_rcor_dominant(const ColoredGraph& g, std::uint64_t seed) {
  std::vector<int> degree(g.num_vertices(), 0);
  for (const Edge& e : g.graph().edges()) {
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
  }
  const int max_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  const double bound = 1.0 / std::max(1, max_degree);
  Rng rng(seed);
  RcorParameters p;
  p.a = uniform_draws(rng, g.num_vertex_classes(), 0.5, 2.0);
  p.c = uniform_draws(rng, g.num_edge_classes(), -bound, bound);
  return assemble_rcor(g, p);
}

ConcentrationPoint sample_rcor_any(const ColoredGraph& g, std::uint64_t seed) {
  try {
    return sample_rcor(g, seed);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SamplingExhausted) throw;
    return sample_rcor_dominant(g, seed);
  }
}

bool preserves_mean_space(const Matrix& t, const Partition& m, double tol) {
  const Matrix image = t * mean_space_basis(m).vectors;
  for (Eigen::Index j = 0; j < image.cols(); ++j) {
    for (const auto& block : m.blocks()) {
      double lo = image(block.front(), j);
      double hi = lo;
      for (int a : block) {
        lo = std::min(lo, image(a, j));
        hi = std::max(hi, image(a, j));
      }
      if (hi - lo > tol) return false;
    }
  }
  return true;
}

bool generators_preserve_mean_space(const ColoredGraph& g, const Partition& m) {
  if (m.ground_size() != g.num_vertices()) {
    throw Error(ErrorKind::GroundMismatch, "mean partition does not cover the vertex set");
  }
  // T^u entries are 0/1, so images are small integers and the check is exact.
  for (const auto& t : generator_matrices(g))
    if (!preserves_mean_space(t.entries, m, 0.5)) return false;
  return true;
}

KruskalOracleResult kruskal_invariance_check(const ColoredGraph& g, const Partition& m, int n_samples,
                                             std::uint64_t seed, double tol) {
  KruskalOracleResult result;
  result.generators = generators_preserve_mean_space(g, m);
  const auto sampled = kernels::sampled_invariance_parallel(g, m, n_samples, seed, tol);
  result.sampled_rcon = sampled.rcon;
  result.sampled_rcor = sampled.rcor;
  return result;
}

bool kruskal_invariance_oracle(const ColoredGraph& g, const Partition& m, int n_samples, std::uint64_t seed,
                               double tol) {
  return kruskal_invariance_check(g, m, n_samples, seed, tol).holds();
}

}  // namespace symgauss
