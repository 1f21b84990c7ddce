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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permclass/classes.hpp"
#include "permclass/circuit.hpp"
#include "permclass/kron.hpp"
#include "permclass/permutation.hpp"
#include "permclass/unitary.hpp"

namespace permclass {

struct Tolerances {
  double atol = kDefaultAtol;
  double rank1_tol = kDefaultRank1Tol;
};

struct ClassVerdict {
  bool member = false;
  /// Worst numeric witness: max entry deviation, or the worst norm/overlap
  /// defect for the state-based checks.
  double deviation = 0.0;
  /// Failing basis pair (b, c) for the state-based checks, when non-member.
  std::optional<std::pair<Eigen::Index, Eigen::Index>> witness;
};

struct VerificationReport {
  std::map<ClassId, ClassVerdict> per_class;
  std::vector<ClassId> minimal;
  double unitarity_deviation = 0.0;
  std::vector<std::string> diagnostics;

  bool member(ClassId id) const { return per_class.at(id).member; }
};

/// One per-class membership check. Throws DimensionMismatch / NotUnitary.
ClassVerdict verify(ClassId label, const Matrix& u, const Permutation& p,
                    Eigen::Index aux_dim, const Tolerances& tol = {});

/// Runs all ten checks, records witnesses, and extracts the minimal classes
/// of the member set under the inclusion order.
VerificationReport classify_all(const Matrix& u, const Permutation& p,
                                Eigen::Index aux_dim, const Tolerances& tol = {});

/// Circuit-level wrapper. Without RESET this is classify_all of the circuit
/// unitary. A trailing RESET suffix covering every auxiliary qubit upgrades a
/// clean wasting-separable prefix to the corresponding clean non-wasting
/// class; a non-separable wasting prefix yields a NonSeparableWaste
/// diagnostic and no upgrade.
VerificationReport classify_circuit(const Circuit& c, const Permutation& p,
                                    const Tolerances& tol = {});

}  // namespace permclass
