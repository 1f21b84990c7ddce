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

#include "permclass/kron.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace permclass;

TEST_SUITE_BEGIN("kron");

TEST_CASE("rearranged identity is the outer product of vec(I) with itself") {
  const Matrix r = rearrange(Matrix::Identity(4, 4), 2, 2);
  Vector vec_i(4);
  vec_i << 1, 0, 0, 1;  // row-major vec of I2
  CHECK(max_abs_diff(r, vec_i * vec_i.transpose()) == 0.0);
  CHECK(testing::rank_at_most_one(r, 1e-12));
}

TEST_CASE("rearranged products are rank one, checked against the minor oracle") {
  auto rng = testing::make_rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = testing::random_unitary(2, rng);
    const Matrix b = testing::random_unitary(4, rng);
    const Matrix r = rearrange(Eigen::kroneckerProduct(a, b).eval(), 2, 4);
    CHECK(testing::rank_at_most_one(r, 1e-10));
  }
}

TEST_CASE("CX rearrangement is not rank one") {
  Matrix cx = Matrix::Identity(4, 4);
  cx(2, 2) = cx(3, 3) = 0.0;
  cx(2, 3) = cx(3, 2) = 1.0;
  const Matrix r = rearrange(cx, 2, 2);
  CHECK(!testing::rank_at_most_one(r, 1e-6));
  const FactorOutcome outcome = factor_unitary(cx, 2, 2);
  CHECK(!outcome.separable());
  // Two equal singular values.
  CHECK(outcome.sigma_ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("identity factors into identities") {
  const FactorOutcome outcome = factor_unitary(Matrix::Identity(4, 4), 2, 2);
  REQUIRE(outcome.separable());
  CHECK(max_abs_diff(outcome.factors->v, Matrix::Identity(2, 2)) < 1e-12);
  CHECK(max_abs_diff(outcome.factors->w, Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("H (x) T round trips up to opposite scalar phases") {
  const Matrix h = gate_matrix(GateKind::H, 1);
  const Matrix t = gate_matrix(GateKind::T, 1);
  const FactorOutcome outcome =
      factor_unitary(Eigen::kroneckerProduct(h, t).eval(), 2, 2);
  REQUIRE(outcome.separable());
  CHECK(outcome.factors->residual < 1e-10);
  CHECK(max_abs_diff(elementwise_abs(outcome.factors->v), elementwise_abs(h)) < 1e-10);
  CHECK(max_abs_diff(elementwise_abs(outcome.factors->w), elementwise_abs(t)) < 1e-10);
}

TEST_CASE("CCX is not separable across the control pair and target") {
  Matrix ccx = Matrix::Identity(8, 8);
  ccx(6, 6) = ccx(7, 7) = 0.0;
  ccx(6, 7) = ccx(7, 6) = 1.0;
  CHECK(!factor_unitary(ccx, 4, 2).separable());
  CHECK(!factor_unitary(ccx, 2, 4).separable());
}

TEST_CASE("random products factor with unitary factors for any phase") {
  auto rng = testing::make_rng(37);
  const std::vector<std::pair<Eigen::Index, Eigen::Index>> splits = {
      {2, 2}, {2, 4}, {4, 2}, {4, 4}};
  for (const auto& [nv, nw] : splits) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = testing::random_unitary(nv, rng);
      const Matrix b = testing::random_unitary(nw, rng);
      const Complex phase = std::exp(Complex{0.0, 0.1 + 0.5 * trial});
      const Matrix u = phase * Eigen::kroneckerProduct(a, b).eval();
      const FactorOutcome outcome = factor_unitary(u, nv, nw);
      REQUIRE(outcome.separable());
      CHECK(outcome.factors->residual < 1e-10);
      CHECK(is_unitary(outcome.factors->v, 1e-10));
      CHECK(is_unitary(outcome.factors->w, 1e-10));
      CHECK(max_abs_diff(Eigen::kroneckerProduct(outcome.factors->v,
                                                 outcome.factors->w)
                             .eval(),
                         u) < 1e-10);
    }
  }
}

TEST_CASE("factorization is unique up to opposite phases") {
  auto rng = testing::make_rng(41);
  const Matrix a = testing::random_unitary(4, rng);
  const Matrix b = testing::random_unitary(2, rng);
  const Matrix u = Eigen::kroneckerProduct(a, b).eval();
  const FactorOutcome first = factor_unitary(u, 4, 2);
  const Complex phase = std::exp(Complex{0.0, 0.913});
  const FactorOutcome second = factor_unitary((phase * u).eval(), 4, 2);
  REQUIRE(first.separable());
  REQUIRE(second.separable());
  CHECK(max_abs_diff(elementwise_abs(first.factors->v),
                     elementwise_abs(second.factors->v)) < 1e-9);
  CHECK(max_abs_diff(elementwise_abs(first.factors->w),
                     elementwise_abs(second.factors->w)) < 1e-9);
}

TEST_CASE("non-unitary input is rejected") {
  Matrix m = Matrix::Identity(4, 4);
  m(0, 0) = 2.0;
  CHECK_THROWS_AS(factor_unitary(m, 2, 2), NotUnitary);
  CHECK_THROWS_AS(rearrange(Matrix::Identity(4, 4), 3, 2), BadDimension);
}

TEST_SUITE_END();
