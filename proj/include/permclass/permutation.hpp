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
#include <vector>

#include "permclass/errors.hpp"

namespace permclass {

/// Bijection on [N] with N a power of two, the specification object circuit
/// classifications are checked against.
class Permutation {
 public:
  /// Throws InvalidCircuit if mapping is not a bijection on a power-of-two
  /// domain.
  explicit Permutation(std::vector<std::size_t> mapping);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t j) const { return map_[j]; }
  const std::vector<std::size_t>& mapping() const { return map_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

/// Identity on a register of num_qubits qubits.
Permutation identity_permutation(std::uint32_t num_qubits);

/// Multi-controlled Toffoli action: flip the last (target) qubit iff all
/// num_controls control qubits are 1. Register size num_controls + 1.
Permutation mct_permutation(std::uint32_t num_controls);

}  // namespace permclass
