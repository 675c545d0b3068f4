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

#include <string>
#include <string_view>
#include <vector>

#include "symgauss/colored_graph.hpp"
#include "symgauss/linalg.hpp"
#include "symgauss/model_space.hpp"
#include "symgauss/partition.hpp"

namespace symgauss {

// n observations (rows) of the variables, in the given column order.
class Dataset {
 public:
  // Throws ValidationError unless rows.cols() == |variables| and n >= 2.
  Dataset(std::vector<std::string> variables, Matrix rows);

  const std::vector<std::string>& variables() const { return variables_; }
  const Matrix& rows() const { return rows_; }
  std::size_t n() const { return static_cast<std::size_t>(rows_.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(rows_.cols()); }
  Vector sample_mean() const { return rows_.colwise().mean().transpose(); }

 private:
  std::vector<std::string> variables_;
  Matrix rows_;
};

// Sums of squares and products about mean_used.
struct SspMatrix {
  Matrix w;
  std::size_t n = 0;
  Vector mean_used;
};

struct FitOptions {
  double grad_tol = 1e-8;
  double lik_tol = 1e-10;
  int max_iter = 200;
  int max_alternating = 500;
  // Use the alternating branch even when the closed form applies.
  bool force_alternating = false;
};

enum class MeanMethod { ClosedForm, Alternating };

std::string_view to_string(MeanMethod method);

struct ConcentrationFit {
  RconParameters theta;
  ConcentrationPoint k;
  double loglik = 0.0;
  double initial_loglik = 0.0;
  int iterations = 0;
  bool converged = false;
  // Infinity norm of the score at theta.
  double score_norm = 0.0;
};

struct ModelFit {
  Vector mu_hat;
  ConcentrationPoint k_hat;
  RconParameters theta_hat;
  double loglik = 0.0;
  std::size_t mean_dim = 0;
  // Alternating rounds for the alternating branch; scoring iterations of
  // the single concentration fit for the closed form.
  int iterations = 0;
  bool converged = false;
  MeanMethod method = MeanMethod::ClosedForm;
  double score_norm = 0.0;
  std::size_t n = 0;
  Partition mean_partition;
  ColoredGraph model;
};

struct LrtResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
};

// Orthogonal projection of the sample mean onto the vectors constant on the
// blocks of m: block averages of the coordinate means. Throws GroundMismatch.
Vector ls_mean(const Dataset& d, const Partition& m);

// Likelihood maximizer over the mean space of m for fixed K:
// B (B^T K B)^{-1} B^T K ybar. Throws SingularProjection.
Vector gls_mean(const Matrix& k, const Dataset& d, const Partition& m);
Vector gls_mean(const ConcentrationPoint& k, const Dataset& d, const Partition& m);

// Throws DimensionMismatch.
SspMatrix residual_ssp(const Dataset& d, const Vector& mu);

// (n/2) log det K - trace(K W)/2. The -(n p / 2) log(2 pi) constant is
// omitted everywhere, which leaves likelihood-ratio statistics unchanged.
// Throws DimensionMismatch, NotPositiveDefinite.
double profile_loglik(const Matrix& k, const SspMatrix& w);
double profile_loglik(const ConcentrationPoint& k, const SspMatrix& w);

// Score of the profile log-likelihood in the RCON parameters:
// s_u = (n/2) trace(T^u K^{-1}) - trace(T^u W)/2, vertex classes first.
std::vector<double> rcon_score(const ColoredGraph& g, const Matrix& k, const SspMatrix& w);

// Maximizes the profile likelihood over the RCON space of g by Fisher scoring
// with step halving. Throws DegenerateW or NotConverged.
ConcentrationFit fit_rcon_concentration(const SspMatrix& w, const ColoredGraph& g, const FitOptions& opts = {});

// Joint fit of mean (constant on blocks of m) and RCON concentration. The
// closed form (least squares mean, then one concentration fit) is used when
// mean_mle_equals_ls(g, m) holds; otherwise GLS mean updates alternate with
// concentration fits until the log-likelihood gain drops below lik_tol.
// d.variables() must equal the graph's vertex list (GroundMismatch).
ModelFit fit_model(const Dataset& d, const ColoredGraph& g, const Partition& m, const FitOptions& opts = {});

// -2 log LR with df = difference of mean dimensions and an asymptotic
// chi-square p-value. Throws NonNestedModels unless both fits share the
// concentration model and sample size and the null mean partition is coarser.
LrtResult lr_test(const ModelFit& null_fit, const ModelFit& alt_fit);

// P(X >= x) for X ~ chi-square(df); 1 for df == 0.
double chi_square_upper_tail(double x, int df);

}  // namespace symgauss
