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

#include "symgauss/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symgauss/error.hpp"
#include "symgauss/model_space.hpp"
#include "symgauss/regularity.hpp"
#include "symgauss/rng.hpp"

namespace symgauss::kernels {

namespace {

void require_mean_dimension(const Matrix& rows, const Vector& mu) {
  if (rows.cols() != mu.size()) {
    throw Error(ErrorKind::DimensionMismatch, "mean has length " + std::to_string(mu.size()) + ", data has " +
                                                  std::to_string(rows.cols()) + " columns");
  }
}

// Upper triangle of sum over rows [begin, end) of (y - mu)(y - mu)^T.
void accumulate_upper(const Matrix& rows, const Vector& mu, Eigen::Index begin, Eigen::Index end, Matrix& out) {
  const Eigen::Index p = rows.cols();
  Vector r(p);
  for (Eigen::Index i = begin; i < end; ++i) {
    r = rows.row(i).transpose() - mu;
    for (Eigen::Index a = 0; a < p; ++a)
      for (Eigen::Index b = a; b < p; ++b) out(a, b) += r(a) * r(b);
  }
}

void mirror_upper(Matrix& w) {
  for (Eigen::Index a = 0; a < w.rows(); ++a)
    for (Eigen::Index b = 0; b < a; ++b) w(a, b) = w(b, a);
}

bool sample_preserves(const ColoredGraph& g, const Partition& m, std::uint64_t seed, bool rcor, double tol) {
  const ConcentrationPoint k = rcor ? sample_rcor_any(g, seed) : sample_rcon(g, seed);
  return preserves_mean_space(k.k, m, tol);
}

std::vector<std::vector<int>> all_restricted_growth_strings(std::size_t n) {
  std::vector<std::vector<int>> out;
  out.reserve(bell_number(n));
  for_each_restricted_growth_string(n, [&](std::span<const int> rgs) {
    out.emplace_back(rgs.begin(), rgs.end());
    return true;
  });
  return out;
}

void require_enumerable(const ColoredGraph& g, std::size_t max_ground_size) {
  if (g.num_vertices() > max_ground_size) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.num_vertices()) + " vertices exceeds the enumeration limit " +
                                         std::to_string(max_ground_size));
  }
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Matrix residual_ssp_serial(const Matrix& rows, const Vector& mu) {
  require_mean_dimension(rows, mu);
  const Eigen::Index p = rows.cols();
  Matrix w = Matrix::Zero(p, p);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const Vector r = rows.row(i).transpose() - mu;
    w.noalias() += r * r.transpose();
  }
  return w;
}

Matrix residual_ssp_parallel(const Matrix& rows, const Vector& mu) {
  require_mean_dimension(rows, mu);
  const Eigen::Index p = rows.cols();
  const Eigen::Index n = rows.rows();
  const Eigen::Index chunks = (n + kSspChunkRows - 1) / kSspChunkRows;
  std::vector<Matrix> partial(static_cast<std::size_t>(chunks), Matrix::Zero(p, p));
#pragma omp parallel for schedule(static) if (chunks > 1)
  for (Eigen::Index c = 0; c < chunks; ++c) {
    const Eigen::Index begin = c * kSspChunkRows;
    const Eigen::Index end = std::min(n, begin + kSspChunkRows);
    accumulate_upper(rows, mu, begin, end, partial[static_cast<std::size_t>(c)]);
  }
  Matrix w = Matrix::Zero(p, p);
  for (const auto& part : partial) w += part;
  mirror_upper(w);
  return w;
}

SampledInvariance sampled_invariance_serial(const ColoredGraph& g, const Partition& m, int n_samples,
                                            std::uint64_t seed, double tol) {
  SampledInvariance out;
  for (int i = 0; i < n_samples; ++i) {
    const auto stream = static_cast<std::uint64_t>(i);
    out.rcon = out.rcon && sample_preserves(g, m, derive_seed(seed, 2 * stream), false, tol);
    out.rcor = out.rcor && sample_preserves(g, m, derive_seed(seed, 2 * stream + 1), true, tol);
  }
  return out;
}

SampledInvariance sampled_invariance_parallel(const ColoredGraph& g, const Partition& m, int n_samples,
                                              std::uint64_t seed, double tol) {
  const int tasks = 2 * std::max(0, n_samples);
  std::vector<char> ok(static_cast<std::size_t>(tasks), 1);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < tasks; ++t) {
    try {
      ok[static_cast<std::size_t>(t)] =
          sample_preserves(g, m, derive_seed(seed, static_cast<std::uint64_t>(t)), t % 2 == 1, tol) ? 1 : 0;
    } catch (...) {
#pragma omp critical(symgauss_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  SampledInvariance out;
  for (int t = 0; t < tasks; ++t) {
    if (ok[static_cast<std::size_t>(t)]) continue;
    (t % 2 == 0 ? out.rcon : out.rcor) = false;
  }
  return out;
}

std::vector<Partition> enumerate_valid_partitions_serial(const ColoredGraph& g, std::size_t max_ground_size) {
  require_enumerable(g, max_ground_size);
  std::vector<Partition> out;
  for_each_restricted_growth_string(g.num_vertices(), [&](std::span<const int> rgs) {
    Partition m = Partition::from_labels(rgs);
    if (mean_mle_equals_ls(g, m).holds) out.push_back(std::move(m));
    return true;
  });
  return out;
}

std::vector<Partition> enumerate_valid_partitions_parallel(const ColoredGraph& g, std::size_t max_ground_size) {
  require_enumerable(g, max_ground_size);
  const auto strings = all_restricted_growth_strings(g.num_vertices());
  const auto count = static_cast<std::ptrdiff_t>(strings.size());
  std::vector<char> valid(strings.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Partition m = Partition::from_labels(strings[static_cast<std::size_t>(i)]);
    valid[static_cast<std::size_t>(i)] = mean_mle_equals_ls(g, m).holds ? 1 : 0;
  }
  std::vector<Partition> out;
  for (std::size_t i = 0; i < strings.size(); ++i)
    if (valid[i]) out.push_back(Partition::from_labels(strings[i]));
  return out;
}

}  // namespace symgauss::kernels
