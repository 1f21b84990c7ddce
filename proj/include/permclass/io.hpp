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

#include <iosfwd>
#include <string>

#include "permclass/circuit.hpp"

namespace permclass {

// Circuit text format:
//   qubits main=<m> aux=<a>
//   <gatename> <q0> <q1> ...
//   block <start> <end> <tag>
// Gate names are lowercase (x, h, z, s, sdg, t, tdg, cx, cz, ccx, rccx,
// rccxdg, rc3x, rc3xdg, margolus, margolusdg, mcx<k>, reset); `#` starts a
// comment and blank lines are ignored. Block lines follow the gates.

/// Throws ParseError with a line number on malformed input.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);

std::string print_circuit(const Circuit& c);

}  // namespace permclass
