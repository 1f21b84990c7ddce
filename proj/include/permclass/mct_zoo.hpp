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

#include "permclass/circuit.hpp"

namespace permclass {

// Reference multi-controlled Toffoli circuits. Layout convention for the
// generators: controls are qubits 0..m-1, the target is qubit m, auxiliary
// qubits follow. Generators annotate each gate as a block and mark every
// (V, U, V^dag) conjugation shell with conjv/conju/conjvdg tags.

/// Six-CNOT Toffoli over {H, T, Tdg, CX}; unitary equals CCX exactly.
Circuit toffoli_strict();

/// Three-CNOT relative-phase Toffoli (Margolus ladder, expanded).
Circuit relative_toffoli();

/// Relative-phase Toffoli with two controls, no auxiliary (one RCCX gate).
Circuit rccx();

/// Relative-phase Toffoli with three controls, no auxiliary (one RC3X gate).
Circuit rc3x();

/// Two-sweep Toffoli ladder over num_controls >= 3 controls with
/// num_controls - 2 dirty auxiliary qubits; 4(m-2) Toffoli gates, exact MCT
/// action with arbitrary auxiliary input restored.
Circuit barenco_ladder(std::uint32_t num_controls);

/// Strict MCT from relative-phase Toffoli blocks and their inverses using
/// ceil((n-3)/2) auxiliary qubits, n = num_controls + 1 >= 5. The clean
/// variant is the fold-hit-unfold chain; the dirty variant runs the two-sweep
/// schedule with the off-conjugation rungs kept strict (decomposed through a
/// borrowed qubit).
Circuit vchain(std::uint32_t num_controls, bool dirty);

/// Clean wasting-entangled MCT: the single relative-phase chain left after
/// dropping the ladder's head and tail blocks (num_controls - 1 gates).
Circuit cwe_mct(std::uint32_t num_controls);

/// Dirty wasting-entangled MCT: the ladder's first sweep with every Toffoli
/// replaced by its relative-phase version (2*num_controls - 3 gates).
Circuit dwe_mct(std::uint32_t num_controls);

/// Expands composite gates to their defining {H, T, Tdg, S, Sdg, CX}
/// sequences; MCX and base gates pass through. Block ranges are remapped.
Circuit expand_to_clifford_t(const Circuit& c);

}  // namespace permclass
