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

#include <Eigen/SVD>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace permclass {

Matrix rearrange(const Matrix& u, Eigen::Index nv, Eigen::Index nw) {
  if (nv <= 0 || nw <= 0 || u.rows() != u.cols() || u.rows() != nv * nw)
    throw BadDimension("matrix dimension must equal nv * nw");
  Matrix r(nv * nv, nw * nw);
  for (Eigen::Index i = 0; i < nv; ++i)
    for (Eigen::Index j = 0; j < nv; ++j)
      for (Eigen::Index k = 0; k < nw; ++k)
        for (Eigen::Index l = 0; l < nw; ++l)
          r(i * nv + j, k * nw + l) = u(i * nw + k, j * nw + l);
  return r;
}

namespace {

struct DominantPair {
  double sigma0 = 0.0;
  double sigma_ratio = 0.0;
  Vector left;
  Vector right;
};

// Full SVD of the rearrangement. Strongly rectangular inputs are reduced with
// a blocked Householder QR first; the SVD of the triangular factor is the SVD
// of the whole matrix with the orthogonal factor folded back in.
DominantPair dominant_singular_pair(const Matrix& r) {
  DominantPair out;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();

  if (rows > 2 * cols) {
    Eigen::HouseholderQR<Matrix> qr(r);
    const Matrix t = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    out.sigma0 = sigma(0);
    out.sigma_ratio = sigma.size() > 1 ? sigma(1) / sigma(0) : 0.0;
    Vector padded = Vector::Zero(rows);
    padded.head(cols) = svd.matrixU().col(0);
    out.left = qr.householderQ() * padded;
    out.right = svd.matrixV().col(0);
    return out;
  }
  if (cols > 2 * rows) {
    Eigen::HouseholderQR<Matrix> qr(r.adjoint());
    const Matrix t = qr.matrixQR().topRows(rows).triangularView<Eigen::Upper>();
    // r = t^dag Q^dag, so the right singular vectors pick up Q.
    Eigen::JacobiSVD<Matrix> svd(t.adjoint().eval(),
                                 Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    out.sigma0 = sigma(0);
    out.sigma_ratio = sigma.size() > 1 ? sigma(1) / sigma(0) : 0.0;
    out.left = svd.matrixU().col(0);
    Vector padded = Vector::Zero(cols);
    padded.head(rows) = svd.matrixV().col(0);
    out.right = qr.householderQ() * padded;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  out.sigma0 = sigma(0);
  out.sigma_ratio = sigma.size() > 1 ? sigma(1) / sigma(0) : 0.0;
  out.left = svd.matrixU().col(0);
  out.right = svd.matrixV().col(0);
  return out;
}

}  // namespace

FactorOutcome factor_unitary(const Matrix& u, Eigen::Index nv, Eigen::Index nw,
                             double atol, double rank1_tol) {
  if (!is_unitary(u, atol)) throw NotUnitary("input is not unitary within atol");
  return factor_unitary_prevalidated(u, nv, nw, atol, rank1_tol);
}

FactorOutcome factor_unitary_prevalidated(const Matrix& u, Eigen::Index nv,
                                          Eigen::Index nw, double atol,
                                          double rank1_tol) {
  const DominantPair top = dominant_singular_pair(rearrange(u, nv, nw));

  FactorOutcome outcome;
  outcome.sigma_ratio = top.sigma_ratio;
  if (outcome.sigma_ratio > rank1_tol) return outcome;

  // R ~ sigma1 * u1 v1^dag, so vec(V) = sigma1 u1 and vec(W) = conj(v1).
  Vector vec_v = top.sigma0 * top.left;
  Vector vec_w = top.right.conjugate();
  Matrix v(nv, nv), w(nw, nw);
  for (Eigen::Index i = 0; i < nv; ++i)
    for (Eigen::Index j = 0; j < nv; ++j) v(i, j) = vec_v(i * nv + j);
  for (Eigen::Index k = 0; k < nw; ++k)
    for (Eigen::Index l = 0; l < nw; ++l) w(k, l) = vec_w(k * nw + l);

  // Both factors are rescaled unitaries; normalize by Frobenius norm.
  v *= std::sqrt(static_cast<double>(nv)) / v.norm();
  w *= std::sqrt(static_cast<double>(nw)) / w.norm();

  // Phase split convention: first entry of W with modulus > 0.5/sqrt(nw)
  // becomes real positive.
  const double threshold = 0.5 / std::sqrt(static_cast<double>(nw));
  for (Eigen::Index k = 0; k < nw; ++k) {
    bool done = false;
    for (Eigen::Index l = 0; l < nw; ++l) {
      if (std::abs(w(k, l)) > threshold) {
        const Complex phase = w(k, l) / std::abs(w(k, l));
        w *= std::conj(phase);
        v *= phase;
        done = true;
        break;
      }
    }
    if (done) break;
  }

  FactorResult result;
  result.residual = max_abs_diff(Eigen::kroneckerProduct(v, w).eval(), u);
  result.v = std::move(v);
  result.w = std::move(w);
  if (result.residual >= atol || !is_unitary(result.v, atol) ||
      !is_unitary(result.w, atol))
    return outcome;  // rank-one numerically but not a unitary product
  outcome.factors = std::move(result);
  return outcome;
}

}  // namespace permclass
