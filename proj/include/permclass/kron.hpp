// Copyright 2026 The permclass authors
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

#include <optional>

#include "permclass/unitary.hpp"

namespace permclass {

/// Singular-value gap below which the rearrangement counts as rank one.
inline constexpr double kDefaultRank1Tol = 1e-8;

/// Van Loan-Pitsianis rearrangement: R has shape nv^2 x nw^2 with
/// R(i*nv + j, k*nw + l) = U(i*nw + k, j*nw + l), so U = V (x) W iff R equals
/// the rank-one outer product vec(V) vec(W)^T. Throws BadDimension.
Matrix rearrange(const Matrix& u, Eigen::Index nv, Eigen::Index nw);

struct FactorResult {
  Matrix v;
  Matrix w;
  double residual = 0.0;  // max-entry deviation of kron(v, w) from the input
};

struct FactorOutcome {
  std::optional<FactorResult> factors;  // empty: not separable
  double sigma_ratio = 0.0;             // sigma2 / sigma1 of the rearrangement

  bool separable() const { return factors.has_value(); }
};

/// Decides U = V (x) W for the given subsystem dimensions via the dominant
/// singular vector of the rearrangement, rescales both factors to unitaries,
/// and fixes the scalar phase split by making the first entry of W with
/// modulus above 0.5/sqrt(nw) real positive. Throws NotUnitary/BadDimension.
FactorOutcome factor_unitary(const Matrix& u, Eigen::Index nv, Eigen::Index nw,
                             double atol = kDefaultAtol,
                             double rank1_tol = kDefaultRank1Tol);

/// As factor_unitary but trusts the caller's unitarity validation; the full
/// U U^dag product is the dominant cost at large dimensions.
FactorOutcome factor_unitary_prevalidated(const Matrix& u, Eigen::Index nv,
                                          Eigen::Index nw,
                                          double atol = kDefaultAtol,
                                          double rank1_tol = kDefaultRank1Tol);

}  // namespace permclass
