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
#include <span>
#include <variant>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/linalg.hpp"
#include "symgauss/partition.hpp"

namespace symgauss {

// K = sum_u theta_u T^u. Vertex-class entries are inverse variances,
// edge-class entries inverse covariances.
struct RconParameters {
  std::vector<double> vertex_theta;
  std::vector<double> edge_theta;

  // Vertex classes first, then edge classes.
  std::vector<double> flat() const;
  static RconParameters from_flat(const ColoredGraph& g, std::span<const double> theta);

  friend bool operator==(const RconParameters&, const RconParameters&) = default;
};

// K = A C A with A = diag(a_class(alpha)) and C unit-diagonal with
// C(alpha, beta) = c_class(alpha beta) on edges. a > 0; -c is the partial
// correlation of an edge.
struct RcorParameters {
  std::vector<double> a;
  std::vector<double> c;

  friend bool operator==(const RcorParameters&, const RcorParameters&) = default;
};

enum class SpaceTag { Rcon, Rcor };

struct ConcentrationPoint {
  Matrix k;
  SpaceTag space = SpaceTag::Rcon;
  std::variant<RconParameters, RcorParameters> source;
};

// Throws MissingParameter or NotPositiveDefinite.
ConcentrationPoint assemble_rcon(const ColoredGraph& g, const RconParameters& p);
// Throws MissingParameter, ValidationError (a <= 0) or NotPositiveDefinite.
ConcentrationPoint assemble_rcor(const ColoredGraph& g, const RcorParameters& p);

// Class-equal diagonal and off-diagonal entries, zeros off the graph, and
// positive definite. Throws DimensionMismatch.
bool is_member_rcon(const Matrix& k, const ColoredGraph& g, double tol = kMembershipTolerance);

// Class-equal diagonal, class-equal partial correlations
// -k_ab / sqrt(k_aa k_bb), zeros off the graph. Throws DimensionMismatch, or
// NotPositiveDefinite when k is not positive definite.
bool is_member_rcor(const Matrix& k, const ColoredGraph& g, double tol = kMembershipTolerance);

// theta_u ~ U[-1, 1], then every vertex-class theta is shifted by
// |lambda_min| + 1. Always positive definite; deterministic in the seed.
ConcentrationPoint sample_rcon(const ColoredGraph& g, std::uint64_t seed);

inline constexpr int kRcorMaxTries = 1000;

// a_v ~ U[0.5, 2], c_u ~ U(-1, 1), redrawn until K is positive definite.
// Throws SamplingExhausted after kRcorMaxTries draws.
ConcentrationPoint sample_rcor(const ColoredGraph& g, std::uint64_t seed);

// a_v ~ U[0.5, 2], c_u ~ U(-1/d, 1/d) with d the maximum vertex degree, so C
// is strictly diagonally dominant and K is positive definite on the first
// draw. Used where sample_rcor's rejection rate is hopeless (dense graphs).
ConcentrationPoint sample_rcor_dominant(const ColoredGraph& g, std::uint64_t seed);

// sample_rcor, falling back to sample_rcor_dominant on SamplingExhausted.
ConcentrationPoint sample_rcor_any(const ColoredGraph& g, std::uint64_t seed);

// True iff t maps every indicator of a block of m to a vector constant on the
// blocks of m, within tol.
bool preserves_mean_space(const Matrix& t, const Partition& m, double tol = kMembershipTolerance);

// Exact check: every generator matrix T^u preserves the mean space of m.
bool generators_preserve_mean_space(const ColoredGraph& g, const Partition& m);

struct KruskalOracleResult {
  bool sampled_rcon = true;
  bool sampled_rcor = true;
  bool generators = true;

  bool sampled() const { return sampled_rcon && sampled_rcor; }
  bool holds() const { return sampled() && generators; }
};

// Numerical check of K Omega(m) ⊆ Omega(m): n_samples draws from each of the
// RCON and RCOR spaces (sample i uses stream seeds derived from `seed`), plus
// the exact generator-matrix check.
KruskalOracleResult kruskal_invariance_check(const ColoredGraph& g, const Partition& m, int n_samples,
                                             std::uint64_t seed, double tol = kMembershipTolerance);

bool kruskal_invariance_oracle(const ColoredGraph& g, const Partition& m, int n_samples, std::uint64_t seed,
                               double tol = kMembershipTolerance);

}  // namespace symgauss
