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

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <optional>

namespace symgauss {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Cholesky pivots (squared diagonal of L) must exceed this for a matrix to
// count as positive definite.
inline constexpr double kPdTolerance = 1e-10;

// Default absolute tolerance for structural membership checks.
inline constexpr double kMembershipTolerance = 1e-8;

// Returns the factorization when every pivot exceeds pivot_tol.
std::optional<Eigen::LLT<Matrix>> cholesky(const Matrix& k, double pivot_tol = kPdTolerance);

bool is_positive_definite(const Matrix& k, double pivot_tol = kPdTolerance);

double log_det(const Eigen::LLT<Matrix>& llt);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace symgauss
