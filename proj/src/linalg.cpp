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

#include "symgauss/linalg.hpp"

#include <cmath>

namespace symgauss {

std::optional<Eigen::LLT<Matrix>> cholesky(const Matrix& k, double pivot_tol) {
  if (k.rows() != k.cols() || !k.allFinite()) return std::nullopt;
  Eigen::LLT<Matrix> llt(k);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const Matrix& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    const double pivot = l(i, i) * l(i, i);
    if (!(pivot > pivot_tol)) return std::nullopt;
  }
  return llt;
}

bool is_positive_definite(const Matrix& k, double pivot_tol) {
  return cholesky(k, pivot_tol).has_value();
}

double log_det(const Eigen::LLT<Matrix>& llt) {
  const Matrix& l = llt.matrixLLT();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) sum += std::log(l(i, i));
  return 2.0 * sum;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace symgauss
