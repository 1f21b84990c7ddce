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

#include "permclass/unitary.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace permclass {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix base_matrix(GateKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex t_phase = std::exp(kI * (M_PI / 4.0));
  Matrix m;
  switch (kind) {
    case GateKind::X:
      m = Matrix::Zero(2, 2);
      m(0, 1) = m(1, 0) = 1.0;
      return m;
    case GateKind::H:
      m = Matrix(2, 2);
      m << s, s, s, -s;
      return m;
    case GateKind::Z:
      m = Matrix::Identity(2, 2);
      m(1, 1) = -1.0;
      return m;
    case GateKind::S:
      m = Matrix::Identity(2, 2);
      m(1, 1) = kI;
      return m;
    case GateKind::Sdg:
      m = Matrix::Identity(2, 2);
      m(1, 1) = -kI;
      return m;
    case GateKind::T:
      m = Matrix::Identity(2, 2);
      m(1, 1) = t_phase;
      return m;
    case GateKind::Tdg:
      m = Matrix::Identity(2, 2);
      m(1, 1) = std::conj(t_phase);
      return m;
    case GateKind::CX:
      m = Matrix::Identity(4, 4);
      m(2, 2) = m(3, 3) = 0.0;
      m(2, 3) = m(3, 2) = 1.0;
      return m;
    case GateKind::CZ:
      m = Matrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    default:
      throw Error("no base matrix for gate kind");
  }
}

// Local unitary of a composite kind, computed from its defining expansion on
// a private register 0..k-1.
Matrix expansion_matrix(GateKind kind, std::size_t num_qubits) {
  std::vector<std::uint32_t> qs(num_qubits);
  for (std::size_t i = 0; i < num_qubits; ++i) qs[i] = static_cast<std::uint32_t>(i);
  const Gate self{kind, qs};
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Matrix m = Matrix::Identity(dim, dim);
  for (const Gate& g : gate_expansion(self))
    apply_gate(m, g, static_cast<std::uint32_t>(num_qubits));
  return m;
}

Matrix controlled_x_matrix(std::size_t num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Matrix m = Matrix::Identity(dim, dim);
  m(dim - 2, dim - 2) = m(dim - 1, dim - 1) = 0.0;
  m(dim - 2, dim - 1) = m(dim - 1, dim - 2) = 1.0;
  return m;
}

}  // namespace

const Matrix& gate_matrix(GateKind kind, std::size_t num_qubits) {
  // Composite kinds recurse into base kinds only, so the per-kind statics
  // initialize without cycles.
  switch (kind) {
    case GateKind::Reset:
      throw ContainsReset();
    case GateKind::Mcx: {
      static std::map<std::size_t, Matrix> mcx_cache;
      static std::mutex mutex;
      std::lock_guard<std::mutex> lock(mutex);
      auto it = mcx_cache.find(num_qubits);
      if (it == mcx_cache.end())
        it = mcx_cache.emplace(num_qubits, controlled_x_matrix(num_qubits)).first;
      return it->second;
    }
    case GateKind::CCX: {
      static const Matrix m = controlled_x_matrix(3);
      return m;
    }
    case GateKind::Rccx: {
      static const Matrix m = expansion_matrix(GateKind::Rccx, 3);
      return m;
    }
    case GateKind::RccxDg: {
      static const Matrix m = expansion_matrix(GateKind::RccxDg, 3);
      return m;
    }
    case GateKind::Margolus: {
      static const Matrix m = expansion_matrix(GateKind::Margolus, 3);
      return m;
    }
    case GateKind::MargolusDg: {
      static const Matrix m = expansion_matrix(GateKind::MargolusDg, 3);
      return m;
    }
    case GateKind::Rc3x: {
      static const Matrix m = expansion_matrix(GateKind::Rc3x, 4);
      return m;
    }
    case GateKind::Rc3xDg: {
      static const Matrix m = expansion_matrix(GateKind::Rc3xDg, 4);
      return m;
    }
    case GateKind::X: {
      static const Matrix m = base_matrix(GateKind::X);
      return m;
    }
    case GateKind::H: {
      static const Matrix m = base_matrix(GateKind::H);
      return m;
    }
    case GateKind::Z: {
      static const Matrix m = base_matrix(GateKind::Z);
      return m;
    }
    case GateKind::S: {
      static const Matrix m = base_matrix(GateKind::S);
      return m;
    }
    case GateKind::Sdg: {
      static const Matrix m = base_matrix(GateKind::Sdg);
      return m;
    }
    case GateKind::T: {
      static const Matrix m = base_matrix(GateKind::T);
      return m;
    }
    case GateKind::Tdg: {
      static const Matrix m = base_matrix(GateKind::Tdg);
      return m;
    }
    case GateKind::CX: {
      static const Matrix m = base_matrix(GateKind::CX);
      return m;
    }
    case GateKind::CZ: {
      static const Matrix m = base_matrix(GateKind::CZ);
      return m;
    }
  }
  throw Error("unhandled gate kind");
}

void apply_gate(Matrix& columns, const Gate& g, std::uint32_t total_qubits) {
  const std::size_t k = g.qubits.size();
  const std::size_t dim = std::size_t{1} << total_qubits;
  const std::size_t span = std::size_t{1} << k;

  std::size_t gate_mask = 0;
  std::vector<std::size_t> stride(k);
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = std::size_t{1} << (total_qubits - 1 - g.qubits[i]);
    gate_mask |= stride[i];
  }
  // Row offset of each local basis state; local bit i is qubit i's value.
  std::vector<std::size_t> offset(span, 0);
  for (std::size_t l = 0; l < span; ++l)
    for (std::size_t i = 0; i < k; ++i)
      if ((l >> (k - 1 - i)) & 1) offset[l] += stride[i];

  const Eigen::Index cols = columns.cols();

  if (is_strict_permutation(g.kind)) {
    // Controlled-X family: swap the two rows with all controls set.
    const std::size_t r0 = offset[span - 2];
    const std::size_t r1 = offset[span - 1];
    for (Eigen::Index col = 0; col < cols; ++col)
      for (std::size_t base = 0; base < dim; ++base)
        if (!(base & gate_mask))
          std::swap(columns(static_cast<Eigen::Index>(base + r0), col),
                    columns(static_cast<Eigen::Index>(base + r1), col));
    return;
  }

  const Matrix& local = gate_matrix(g.kind, k);
  Vector in(span), out(span);
  for (Eigen::Index col = 0; col < cols; ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & gate_mask) continue;
      for (std::size_t l = 0; l < span; ++l)
        in(static_cast<Eigen::Index>(l)) =
            columns(static_cast<Eigen::Index>(base + offset[l]), col);
      out.noalias() = local * in;
      for (std::size_t l = 0; l < span; ++l)
        columns(static_cast<Eigen::Index>(base + offset[l]), col) =
            out(static_cast<Eigen::Index>(l));
    }
  }
}

Matrix unitary_of(const Circuit& c) {
  if (c.has_reset()) throw ContainsReset();
  const std::uint32_t total = c.partition.total();
  if (total > kMaxUnitaryQubits)
    throw TooManyQubits("dense unitaries limited to " +
                        std::to_string(kMaxUnitaryQubits) + " qubits");
  const Eigen::Index dim = Eigen::Index{1} << total;
  Matrix m = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates) apply_gate(m, g, total);
  return m;
}

Vector apply_circuit(const Circuit& c, Vector state) {
  if (c.has_reset()) throw ContainsReset();
  const std::uint32_t total = c.partition.total();
  if (total > kDefaultQubitCap)
    throw TooManyQubits("state vectors limited to " +
                        std::to_string(kDefaultQubitCap) + " qubits");
  if (state.size() != (Eigen::Index{1} << total))
    throw DimensionMismatch("state dimension does not match register");
  Matrix cols = state;
  for (const Gate& g : c.gates) apply_gate(cols, g, total);
  return cols.col(0);
}

Matrix permutation_matrix(const Permutation& p) {
  const Eigen::Index n = static_cast<Eigen::Index>(p.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    m(static_cast<Eigen::Index>(p(static_cast<std::size_t>(j))), j) = 1.0;
  return m;
}

Matrix project_clean(const Matrix& u, Eigen::Index aux_dim) {
  if (aux_dim <= 0 || u.rows() != u.cols() || u.rows() % aux_dim != 0)
    throw BadDimension("auxiliary dimension must divide the matrix dimension");
  const Eigen::Index n = u.rows() / aux_dim;
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = u(i * aux_dim, j * aux_dim);
  return out;
}

Matrix strip_global_phase(const Matrix& a) { return std::conj(a(0, 0)) * a; }

Matrix elementwise_abs(const Matrix& a) {
  return a.cwiseAbs().cast<Complex>();
}

Vector witness_state(const Matrix& u, const Permutation& p, Eigen::Index b,
                     Eigen::Index c, Eigen::Index aux_dim) {
  const Eigen::Index n = static_cast<Eigen::Index>(p.size());
  if (u.rows() != n * aux_dim)
    throw BadDimension("matrix dimension must equal permutation size times aux dim");
  if (b < 0 || b >= n || c < 0 || c >= aux_dim)
    throw BadDimension("witness indices out of range");
  const Eigen::Index row = static_cast<Eigen::Index>(p(static_cast<std::size_t>(b))) * aux_dim;
  Vector psi(aux_dim);
  for (Eigen::Index cp = 0; cp < aux_dim; ++cp) psi(cp) = u(row + cp, b * aux_dim + c);
  return psi;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double atol) {
  return u.rows() == u.cols() && unitarity_deviation(u) < atol;
}

}  // namespace permclass
