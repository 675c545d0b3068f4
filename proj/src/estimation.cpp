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

#include "symgauss/estimation.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <tuple>

#include "symgauss/error.hpp"
#include "symgauss/kernels.hpp"
#include "symgauss/regularity.hpp"

namespace symgauss {

Dataset::Dataset(std::vector<std::string> variables, Matrix rows)
    : variables_(std::move(variables)), rows_(std::move(rows)) {
  if (static_cast<std::size_t>(rows_.cols()) != variables_.size()) {
    throw Error(ErrorKind::ValidationError, "data has " + std::to_string(rows_.cols()) + " columns for " +
                                                std::to_string(variables_.size()) + " variables");
  }
  if (rows_.rows() < 2) throw Error(ErrorKind::ValidationError, "at least two observations are required");
  if (!rows_.allFinite()) throw Error(ErrorKind::ValidationError, "data contains non-finite values");
}

std::string_view to_string(MeanMethod method) {
  return method == MeanMethod::ClosedForm ? "closed_form_mean" : "alternating";
}

namespace {

void require_mean_partition(const Dataset& d, const Partition& m) {
  if (m.ground_size() != d.p()) {
    throw Error(ErrorKind::GroundMismatch, "mean partition covers " + std::to_string(m.ground_size()) +
                                               " variables, data has " + std::to_string(d.p()));
  }
}

// Vertex/entry lists of one color class; T^u has ones exactly there.
struct ClassEntries {
  std::vector<std::pair<int, int>> entries;  // (a, b) with a <= b
  bool diagonal = false;
};

std::vector<ClassEntries> class_entries(const ColoredGraph& g) {
  std::vector<ClassEntries> out;
  for (const auto& block : g.vertex_coloring().blocks()) {
    auto& c = out.emplace_back();
    c.diagonal = true;
    for (int a : block) c.entries.emplace_back(a, a);
  }
  for (const auto& block : g.edge_coloring().blocks()) {
    auto& c = out.emplace_back();
    for (int id : block) {
      const Edge& e = g.graph().edges()[static_cast<std::size_t>(id)];
      c.entries.emplace_back(e.a, e.b);
    }
  }
  return out;
}

// trace(T^u M) for symmetric M.
double trace_with(const ClassEntries& c, const Matrix& m) {
  double sum = 0.0;
  for (auto [a, b] : c.entries) sum += c.diagonal ? m(a, b) : 2.0 * m(a, b);
  return sum;
}

Matrix assemble(const std::vector<ClassEntries>& classes, const std::vector<double>& theta, Eigen::Index p) {
  Matrix k = Matrix::Zero(p, p);
  for (std::size_t u = 0; u < classes.size(); ++u) {
    for (auto [a, b] : classes[u].entries) {
      k(a, b) = theta[u];
      k(b, a) = theta[u];
    }
  }
  return k;
}

std::vector<double> score(const std::vector<ClassEntries>& classes, const Matrix& sigma, const Matrix& w, double n) {
  std::vector<double> s(classes.size());
  for (std::size_t u = 0; u < classes.size(); ++u)
    s[u] = 0.5 * n * trace_with(classes[u], sigma) - 0.5 * trace_with(classes[u], w);
  return s;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// I_uv = (n/2) trace(T^u Sigma T^v Sigma).
Matrix expected_information(const std::vector<ClassEntries>& classes, const Matrix& sigma, double n) {
  const Eigen::Index p = sigma.rows();
  const auto q = static_cast<Eigen::Index>(classes.size());
  std::vector<Matrix> t_sigma;
  t_sigma.reserve(classes.size());
  for (const auto& c : classes) {
    // Rows of T^u Sigma: row a gets Sigma's row b for each entry (a, b).
    Matrix m = Matrix::Zero(p, p);
    for (auto [a, b] : c.entries) {
      m.row(a) += sigma.row(b);
      if (a != b) m.row(b) += sigma.row(a);
    }
    t_sigma.push_back(std::move(m));
  }
  Matrix info(q, q);
  for (Eigen::Index u = 0; u < q; ++u) {
    for (Eigen::Index v = u; v < q; ++v) {
      const double tr = t_sigma[static_cast<std::size_t>(u)].cwiseProduct(t_sigma[static_cast<std::size_t>(v)].transpose()).sum();
      info(u, v) = info(v, u) = 0.5 * n * tr;
    }
  }
  return info;
}

}  // namespace

Vector ls_mean(const Dataset& d, const Partition& m) {
  require_mean_partition(d, m);
  const Vector ybar = d.sample_mean();
  Vector mu(ybar.size());
  for (const auto& block : m.blocks()) {
    double sum = 0.0;
    for (int a : block) sum += ybar(a);
    const double avg = sum / static_cast<double>(block.size());
    for (int a : block) mu(a) = avg;
  }
  return mu;
}

Vector gls_mean(const Matrix& k, const Dataset& d, const Partition& m) {
  require_mean_partition(d, m);
  if (k.rows() != static_cast<Eigen::Index>(d.p()) || k.cols() != k.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "concentration matrix does not match the data");
  }
  const Matrix b = mean_space_basis(m).vectors;
  const Matrix btk = b.transpose() * k;
  const Matrix gram = btk * b;
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::SingularProjection, "B^T K B is not invertible");
  return b * llt.solve(btk * d.sample_mean());
}

Vector gls_mean(const ConcentrationPoint& k, const Dataset& d, const Partition& m) { return gls_mean(k.k, d, m); }

SspMatrix residual_ssp(const Dataset& d, const Vector& mu) {
  return {kernels::residual_ssp_parallel(d.rows(), mu), d.n(), mu};
}

double profile_loglik(const Matrix& k, const SspMatrix& w) {
  if (k.rows() != w.w.rows() || k.cols() != w.w.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "K and W have different sizes");
  }
  auto llt = cholesky(k);
  if (!llt) throw Error(ErrorKind::NotPositiveDefinite, "profile likelihood needs a PD concentration matrix");
  return 0.5 * static_cast<double>(w.n) * log_det(*llt) - 0.5 * k.cwiseProduct(w.w).sum();
}

double profile_loglik(const ConcentrationPoint& k, const SspMatrix& w) { return profile_loglik(k.k, w); }

std::vector<double> rcon_score(const ColoredGraph& g, const Matrix& k, const SspMatrix& w) {
  auto llt = cholesky(k);
  if (!llt) throw Error(ErrorKind::NotPositiveDefinite, "score needs a PD concentration matrix");
  const Matrix sigma = llt->solve(Matrix::Identity(k.rows(), k.cols()));
  return score(class_entries(g), sigma, w.w, static_cast<double>(w.n));
}

ConcentrationFit fit_rcon_concentration(const SspMatrix& w, const ColoredGraph& g, const FitOptions& opts) {
  const auto p = static_cast<Eigen::Index>(g.num_vertices());
  if (w.w.rows() != p || w.w.cols() != p) throw Error(ErrorKind::DimensionMismatch, "W does not match the graph");
  if (w.n == 0 || !w.w.allFinite()) throw Error(ErrorKind::DegenerateW, "W is empty or non-finite");
  for (Eigen::Index a = 0; a < p; ++a) {
    if (!(w.w(a, a) > 0.0)) {
      throw Error(ErrorKind::DegenerateW, "zero residual variance for '" + g.graph().vertices()[a] + "'");
    }
  }
  const double n = static_cast<double>(w.n);
  const auto classes = class_entries(g);

  // Start from a diagonal K: class averages of diag(n W^{-1}), or of n / w_aa
  // when W is singular.
  Vector start_diag(p);
  if (auto llt = cholesky(w.w)) {
    start_diag = n * llt->solve(Matrix::Identity(p, p)).diagonal();
  } else {
    start_diag = n * w.w.diagonal().cwiseInverse();
  }
  std::vector<double> theta(classes.size(), 0.0);
  for (std::size_t u = 0; u < g.num_vertex_classes(); ++u) {
    double sum = 0.0;
    for (auto [a, b] : classes[u].entries) sum += start_diag(a);
    theta[u] = sum / static_cast<double>(classes[u].entries.size());
  }

  auto evaluate = [&](const std::vector<double>& th, Matrix& k_out) -> std::optional<Eigen::LLT<Matrix>> {
    k_out = assemble(classes, th, p);
    return cholesky(k_out);
  };
  auto loglik_of = [&](const Matrix& k, const Eigen::LLT<Matrix>& llt) {
    return 0.5 * n * log_det(llt) - 0.5 * k.cwiseProduct(w.w).sum();
  };

  Matrix k;
  auto llt = evaluate(theta, k);
  if (!llt) throw Error(ErrorKind::DegenerateW, "starting point is not positive definite");
  ConcentrationFit fit;
  double ll = loglik_of(k, *llt);
  fit.initial_loglik = ll;

  auto score_norm_at = [&](const Eigen::LLT<Matrix>& f) {
    return inf_norm(score(classes, f.solve(Matrix::Identity(p, p)), w.w, n));
  };

  // One scoring step with step halving, which keeps K positive definite and
  // the likelihood from falling. Returns false when no admissible step exists.
  auto step_once = [&]() -> bool {
    const Matrix sigma = llt->solve(Matrix::Identity(p, p));
    const auto s = score(classes, sigma, w.w, n);
    const Matrix info = expected_information(classes, sigma, n);
    const Vector sv = Eigen::Map<const Vector>(s.data(), static_cast<Eigen::Index>(s.size()));
    const Vector step = Eigen::LDLT<Matrix>(info).solve(sv);
    if (!step.allFinite()) throw Error(ErrorKind::DegenerateW, "information matrix is singular");
    double scale = 1.0;
    for (int halving = 0; halving < 60; ++halving, scale *= 0.5) {
      std::vector<double> trial(theta);
      for (std::size_t u = 0; u < trial.size(); ++u) trial[u] += scale * step(static_cast<Eigen::Index>(u));
      Matrix k_trial;
      auto llt_trial = evaluate(trial, k_trial);
      if (!llt_trial) continue;
      const double ll_trial = loglik_of(k_trial, *llt_trial);
      if (ll_trial + 1e-12 * std::max(1.0, std::abs(ll)) < ll) continue;
      theta = std::move(trial);
      k = std::move(k_trial);
      llt = std::move(llt_trial);
      ll = ll_trial;
      return true;
    }
    return false;
  };

  int iter = 0;
  for (;; ++iter) {
    fit.score_norm = score_norm_at(*llt);
    if (!std::isfinite(fit.score_norm)) throw Error(ErrorKind::DegenerateW, "score is not finite");
    if (fit.score_norm <= opts.grad_tol) {
      fit.converged = true;
      break;
    }
    if (iter >= opts.max_iter) break;
    // No admissible step: we are at the numerical optimum or stuck.
    if (!step_once()) {
      ++iter;
      break;
    }
  }

  // Scoring converges quadratically near the optimum, so one more step after
  // the tolerance is met usually lands at machine precision. Kept only if it
  // shrinks the score without lowering the likelihood.
  if (fit.converged) {
    const auto saved = std::tuple{theta, k, *llt, ll};
    if (step_once()) {
      const double polished = score_norm_at(*llt);
      if (polished <= fit.score_norm && ll >= std::get<3>(saved)) {
        fit.score_norm = polished;
        ++iter;
      } else {
        std::tie(theta, k, llt, ll) = saved;
      }
    }
  }
  fit.iterations = iter;
  if (!fit.converged) {
    throw Error(ErrorKind::NotConverged, "Fisher scoring stopped after " + std::to_string(iter) +
                                             " iterations with score norm " + std::to_string(fit.score_norm));
  }
  fit.loglik = ll;
  fit.theta = RconParameters::from_flat(g, theta);
  fit.k = ConcentrationPoint{std::move(k), SpaceTag::Rcon, fit.theta};
  return fit;
}

ModelFit fit_model(const Dataset& d, const ColoredGraph& g, const Partition& m, const FitOptions& opts) {
  if (d.variables() != g.graph().vertices()) {
    throw Error(ErrorKind::GroundMismatch, "data variables do not match the graph's vertices");
  }
  require_mean_partition(d, m);
  const bool closed_form = mean_mle_equals_ls(g, m).holds && !opts.force_alternating;

  ModelFit fit;
  fit.mean_dim = m.num_blocks();
  fit.n = d.n();
  fit.mean_partition = m;
  fit.model = g;

  Vector mu = ls_mean(d, m);
  ConcentrationFit conc = fit_rcon_concentration(residual_ssp(d, mu), g, opts);
  if (closed_form) {
    fit.method = MeanMethod::ClosedForm;
    fit.iterations = conc.iterations;
    fit.converged = conc.converged;
  } else {
    fit.method = MeanMethod::Alternating;
    int round = 0;
    bool converged = false;
    while (round < opts.max_alternating) {
      ++round;
      Vector next_mu = gls_mean(conc.k, d, m);
      ConcentrationFit next = fit_rcon_concentration(residual_ssp(d, next_mu), g, opts);
      const double gain = next.loglik - conc.loglik;
      mu = std::move(next_mu);
      conc = std::move(next);
      if (gain < opts.lik_tol) {
        converged = true;
        break;
      }
    }
    fit.iterations = round;
    fit.converged = converged;
  }
  fit.mu_hat = std::move(mu);
  fit.loglik = conc.loglik;
  fit.score_norm = conc.score_norm;
  fit.theta_hat = conc.theta;
  fit.k_hat = std::move(conc.k);
  return fit;
}

double chi_square_upper_tail(double x, int df) {
  if (df <= 0) return 1.0;
  if (!(x > 0.0)) return 1.0;
  return boost::math::gamma_q(0.5 * df, 0.5 * x);
}

LrtResult lr_test(const ModelFit& null_fit, const ModelFit& alt_fit) {
  if (!(null_fit.model == alt_fit.model)) {
    throw Error(ErrorKind::NonNestedModels, "the fits use different concentration models");
  }
  if (null_fit.n != alt_fit.n) throw Error(ErrorKind::NonNestedModels, "the fits use different sample sizes");
  if (null_fit.mean_partition.ground_size() != alt_fit.mean_partition.ground_size() ||
      !is_finer(alt_fit.mean_partition, null_fit.mean_partition)) {
    throw Error(ErrorKind::NonNestedModels, "the null mean partition is not coarser than the alternative's");
  }
  LrtResult r;
  r.statistic = 2.0 * (alt_fit.loglik - null_fit.loglik);
  r.df = static_cast<int>(alt_fit.mean_dim) - static_cast<int>(null_fit.mean_dim);
  r.p_value = chi_square_upper_tail(r.statistic, r.df);
  return r;
}

}  // namespace symgauss
