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

#include <Eigen/Dense>
#include <complex>

#include "permclass/circuit.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Max-entry tolerance for all equality tests.
inline constexpr double kDefaultAtol = 1e-9;

/// Bit convention: qubit 0 is the most significant bit of a basis index.
/// With auxiliary qubits on the trailing indices, a basis index splits as
/// main_index * aux_dim + aux_index.

/// Local unitary of a gate over its own qubits (first listed qubit is the
/// most significant local bit). Composite kinds are derived from their
/// defining expansions. Throws for RESET.
const Matrix& gate_matrix(GateKind kind, std::size_t num_qubits);

/// Applies the embedding of `g` on `total_qubits` qubits to every column of
/// `columns` in place.
void apply_gate(Matrix& columns, const Gate& g, std::uint32_t total_qubits);

/// Product of per-gate embeddings in circuit order (leftmost gate applied
/// first). Throws ContainsReset / TooManyQubits.
Matrix unitary_of(const Circuit& c);

/// State-vector path; allows up to kDefaultQubitCap qubits.
Vector apply_circuit(const Circuit& c, Vector state);

/// 0-1 matrix with entry (pi(j), j) = 1.
Matrix permutation_matrix(const Permutation& p);

/// (I (x) <0|) U (I (x) |0>): rows and columns whose auxiliary index is 0.
/// Not necessarily unitary. Throws BadDimension.
Matrix project_clean(const Matrix& u, Eigen::Index aux_dim);

/// conj(A_00) * A; removes a global phase when |A_00| = 1.
Matrix strip_global_phase(const Matrix& a);

/// Entrywise modulus.
Matrix elementwise_abs(const Matrix& a);

/// Auxiliary-system vector (<pi(b)| (x) I) U |b, c>; pass c = 0 for clean
/// checks. Throws BadDimension.
Vector witness_state(const Matrix& u, const Permutation& p, Eigen::Index b,
                     Eigen::Index c, Eigen::Index aux_dim);

double max_abs_diff(const Matrix& a, const Matrix& b);
/// Max-entry norm of U U^dag - I.
double unitarity_deviation(const Matrix& u);
bool is_unitary(const Matrix& u, double atol = kDefaultAtol);

}  // namespace permclass
