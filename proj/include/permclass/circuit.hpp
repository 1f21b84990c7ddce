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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permclass/errors.hpp"

namespace permclass {

/// Total qubits a circuit may declare (state-vector paths).
inline constexpr std::uint32_t kDefaultQubitCap = 14;
/// Largest register for which dense unitaries are built.
inline constexpr std::uint32_t kMaxUnitaryQubits = 12;

enum class GateKind : std::uint8_t {
  X,
  H,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  CX,
  CZ,
  CCX,
  Rccx,
  RccxDg,
  Rc3x,
  Rc3xDg,
  Margolus,
  MargolusDg,
  Mcx,
  Reset,
};

/// Lowercase name used by the circuit text format.
std::string gate_name(GateKind kind, std::size_t num_qubits = 0);

/// True for gates whose unitary is a 0-1 permutation matrix (X, CX, CCX, MCX).
bool is_strict_permutation(GateKind kind);

/// True for the relative-phase gate kinds (and their adjoints).
bool is_relative_phase(GateKind kind);

/// True for gates diagonal in the computational basis.
bool is_diagonal(GateKind kind);

/// Strict gate a relative-phase kind is a variant of (Margolus/RCCX -> CCX,
/// RC3X -> MCX with 3 controls). Empty for everything else.
std::optional<GateKind> relative_base(GateKind kind);

GateKind inverse_kind(GateKind kind);

/// Fixed qubit count for a kind, or 0 when variable (MCX).
std::size_t gate_arity(GateKind kind);

/// Qubits are listed controls first, target last.
struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> qubits;

  bool operator==(const Gate&) const = default;

  std::uint32_t target() const { return qubits.back(); }
  std::size_t num_controls() const;
};

/// Main-system qubits occupy indices [0, num_main), auxiliary qubits the
/// trailing indices [num_main, total). The auxiliary system is therefore the
/// least significant part of a basis index.
struct QubitPartition {
  std::uint32_t num_main = 0;
  std::uint32_t num_aux = 0;

  bool operator==(const QubitPartition&) const = default;

  std::uint32_t total() const { return num_main + num_aux; }
  bool is_aux(std::uint32_t q) const { return q >= num_main; }
};

/// Half-open gate-index range tagged as a named subcircuit. Conjugation
/// triples use the tags "conjv:<id>", "conju:<id>", "conjvdg:<id>".
struct BlockAnnotation {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string tag;

  bool operator==(const BlockAnnotation&) const = default;
};

struct Circuit {
  QubitPartition partition;
  std::vector<Gate> gates;
  std::vector<BlockAnnotation> blocks;

  bool operator==(const Circuit&) const = default;

  bool has_reset() const;
  /// Gates before the trailing RESET suffix (everything when no RESET).
  std::size_t reset_suffix_begin() const;
};

/// Throws InvalidCircuit unless all invariants hold: qubit indices in range
/// and pairwise distinct, RESET only in a trailing suffix on auxiliary
/// qubits, block annotations in range and well nested.
void validate_circuit(const Circuit& c, std::uint32_t qubit_cap = kDefaultQubitCap);

struct ResourceCounts {
  std::map<GateKind, std::size_t> per_kind;
  std::size_t cnot_count = 0;
  std::size_t t_count = 0;  // T plus Tdg
  std::size_t depth = 0;
  std::size_t aux_count = 0;

  std::size_t total_gates() const;
  std::size_t kind(GateKind k) const;
};

/// Tallies over the gate list as written; no basis expansion. Depth is
/// unit-cost with gates on disjoint qubits counted as parallel.
ResourceCounts resource_counts(const Circuit& c);

/// Reversed circuit with every gate inverted. Throws ContainsReset.
Circuit invert(const Circuit& c);

/// Defining gate sequence of a composite kind over its own qubits: CCX as the
/// six-CNOT Clifford+T network, Margolus as the three-CNOT Ry ladder, RCCX and
/// RC3X as their standard Clifford+T forms. Base gates and MCX come back
/// unchanged.
std::vector<Gate> gate_expansion(const Gate& g);

}  // namespace permclass
