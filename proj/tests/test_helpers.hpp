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

#include <random>

#include "permclass/circuit.hpp"
#include "permclass/permutation.hpp"
#include "permclass/unitary.hpp"

namespace permclass::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

/// Haar-distributed unitary via QR of a complex Gaussian matrix.
inline Matrix random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex{gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex{1.0, 0.0};
  }
  return q;
}

inline Permutation random_permutation(std::uint32_t num_qubits, std::mt19937_64& rng) {
  std::vector<std::size_t> map(std::size_t{1} << num_qubits);
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

/// Random RESET-free circuit over the full gate set.
inline Circuit random_circuit(std::uint32_t num_qubits, std::size_t num_gates,
                              std::mt19937_64& rng) {
  static const std::vector<GateKind> kinds = {
      GateKind::X,       GateKind::H,        GateKind::Z,    GateKind::S,
      GateKind::Sdg,     GateKind::T,        GateKind::Tdg,  GateKind::CX,
      GateKind::CZ,      GateKind::CCX,      GateKind::Rccx, GateKind::RccxDg,
      GateKind::Rc3x,    GateKind::Rc3xDg,   GateKind::Margolus,
      GateKind::MargolusDg};
  Circuit c;
  c.partition = {num_qubits, 0};
  std::vector<std::uint32_t> order(num_qubits);
  for (std::uint32_t i = 0; i < num_qubits; ++i) order[i] = i;
  while (c.gates.size() < num_gates) {
    const GateKind kind = kinds[rng() % kinds.size()];
    const std::size_t arity = gate_arity(kind);
    if (arity > num_qubits) continue;
    std::shuffle(order.begin(), order.end(), rng);
    c.gates.push_back(
        Gate{kind, std::vector<std::uint32_t>(order.begin(), order.begin() + arity)});
  }
  validate_circuit(c);
  return c;
}

/// Bit-twiddling oracle for circuits made of (relative) permutation gates:
/// tracks the basis index a basis input is mapped to, most significant bit
/// first. Fully independent of the dense matrix path.
inline std::size_t boolean_apply(const Circuit& c, std::size_t basis) {
  const std::uint32_t total = c.partition.total();
  for (const Gate& g : c.gates) {
    if (!is_strict_permutation(g.kind) && !is_relative_phase(g.kind) &&
        !is_diagonal(g.kind))
      throw Error("boolean oracle only handles permutation-like gates");
    if (is_diagonal(g.kind)) continue;
    const std::size_t nc = g.num_controls();
    bool all_set = true;
    for (std::size_t i = 0; i < nc; ++i)
      if (!((basis >> (total - 1 - g.qubits[i])) & 1)) all_set = false;
    if (all_set) basis ^= std::size_t{1} << (total - 1 - g.target());
  }
  return basis;
}

/// Rank-at-most-one test through 2x2 minors; independent of any SVD.
inline bool rank_at_most_one(const Matrix& m, double tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.rows(); ++j)
      for (Eigen::Index k = 0; k < m.cols(); ++k)
        for (Eigen::Index l = k + 1; l < m.cols(); ++l)
          if (std::abs(m(i, k) * m(j, l) - m(i, l) * m(j, k)) > tol) return false;
  return true;
}

}  // namespace permclass::testing
