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

#include "permclass/circuit.hpp"

#include <algorithm>
#include <set>

namespace permclass {

std::string gate_name(GateKind kind, std::size_t num_qubits) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CCX: return "ccx";
    case GateKind::Rccx: return "rccx";
    case GateKind::RccxDg: return "rccxdg";
    case GateKind::Rc3x: return "rc3x";
    case GateKind::Rc3xDg: return "rc3xdg";
    case GateKind::Margolus: return "margolus";
    case GateKind::MargolusDg: return "margolusdg";
    case GateKind::Mcx:
      return num_qubits >= 1 ? "mcx" + std::to_string(num_qubits - 1) : "mcx";
    case GateKind::Reset: return "reset";
  }
  return "?";
}

bool is_strict_permutation(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::Mcx:
      return true;
    default:
      return false;
  }
}

bool is_relative_phase(GateKind kind) {
  switch (kind) {
    case GateKind::Rccx:
    case GateKind::RccxDg:
    case GateKind::Rc3x:
    case GateKind::Rc3xDg:
    case GateKind::Margolus:
    case GateKind::MargolusDg:
      return true;
    default:
      return false;
  }
}

bool is_diagonal(GateKind kind) {
  switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::CZ:
      return true;
    default:
      return false;
  }
}

std::optional<GateKind> relative_base(GateKind kind) {
  switch (kind) {
    case GateKind::Rccx:
    case GateKind::RccxDg:
    case GateKind::Margolus:
    case GateKind::MargolusDg:
      return GateKind::CCX;
    case GateKind::Rc3x:
    case GateKind::Rc3xDg:
      return GateKind::Mcx;
    default:
      return std::nullopt;
  }
}

GateKind inverse_kind(GateKind kind) {
  switch (kind) {
    case GateKind::S: return GateKind::Sdg;
    case GateKind::Sdg: return GateKind::S;
    case GateKind::T: return GateKind::Tdg;
    case GateKind::Tdg: return GateKind::T;
    case GateKind::Rccx: return GateKind::RccxDg;
    case GateKind::RccxDg: return GateKind::Rccx;
    case GateKind::Rc3x: return GateKind::Rc3xDg;
    case GateKind::Rc3xDg: return GateKind::Rc3x;
    case GateKind::Margolus: return GateKind::MargolusDg;
    case GateKind::MargolusDg: return GateKind::Margolus;
    default:
      return kind;  // self-inverse
  }
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Reset:
      return 1;
    case GateKind::CX:
    case GateKind::CZ:
      return 2;
    case GateKind::CCX:
    case GateKind::Rccx:
    case GateKind::RccxDg:
    case GateKind::Margolus:
    case GateKind::MargolusDg:
      return 3;
    case GateKind::Rc3x:
    case GateKind::Rc3xDg:
      return 4;
    case GateKind::Mcx:
      return 0;
  }
  return 0;
}

std::size_t Gate::num_controls() const {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
      return 1;
    case GateKind::CCX:
    case GateKind::Rccx:
    case GateKind::RccxDg:
    case GateKind::Margolus:
    case GateKind::MargolusDg:
      return 2;
    case GateKind::Rc3x:
    case GateKind::Rc3xDg:
      return 3;
    case GateKind::Mcx:
      return qubits.size() - 1;
    default:
      return 0;
  }
}

bool Circuit::has_reset() const {
  return std::any_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return g.kind == GateKind::Reset; });
}

std::size_t Circuit::reset_suffix_begin() const {
  std::size_t i = gates.size();
  while (i > 0 && gates[i - 1].kind == GateKind::Reset) --i;
  return i;
}

void validate_circuit(const Circuit& c, std::uint32_t qubit_cap) {
  const std::uint32_t total = c.partition.total();
  if (c.partition.num_main < 1) throw InvalidCircuit("need at least one main qubit");
  if (total > qubit_cap)
    throw TooManyQubits("circuit declares " + std::to_string(total) +
                        " qubits, cap is " + std::to_string(qubit_cap));

  const std::size_t suffix = c.reset_suffix_begin();
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::size_t arity = gate_arity(g.kind);
    if (arity != 0 && g.qubits.size() != arity)
      throw InvalidCircuit("gate " + gate_name(g.kind) + " expects " +
                           std::to_string(arity) + " qubits");
    if (g.kind == GateKind::Mcx && g.qubits.size() < 4)
      throw InvalidCircuit("mcx needs at least 3 controls; use cx/ccx below that");
    std::set<std::uint32_t> seen;
    for (std::uint32_t q : g.qubits) {
      if (q >= total) throw InvalidCircuit("qubit index out of range");
      if (!seen.insert(q).second) throw InvalidCircuit("duplicate qubit in gate");
    }
    if (g.kind == GateKind::Reset) {
      if (i < suffix) throw InvalidCircuit("RESET allowed only in a trailing suffix");
      if (!c.partition.is_aux(g.qubits[0]))
        throw InvalidCircuit("RESET allowed only on auxiliary qubits");
    }
  }

  // Annotations must be in range and laminar (nested or disjoint).
  std::vector<BlockAnnotation> sorted = c.blocks;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
  });
  std::vector<std::size_t> stack;  // open block end positions
  for (const auto& blk : sorted) {
    if (blk.begin >= blk.end || blk.end > c.gates.size())
      throw InvalidCircuit("block annotation out of range");
    while (!stack.empty() && stack.back() <= blk.begin) stack.pop_back();
    if (!stack.empty() && blk.end > stack.back())
      throw InvalidCircuit("block annotations overlap without nesting");
    stack.push_back(blk.end);
  }
}

std::size_t ResourceCounts::total_gates() const {
  std::size_t n = 0;
  for (const auto& [k, v] : per_kind) n += v;
  return n;
}

std::size_t ResourceCounts::kind(GateKind k) const {
  auto it = per_kind.find(k);
  return it == per_kind.end() ? 0 : it->second;
}

ResourceCounts resource_counts(const Circuit& c) {
  ResourceCounts rc;
  rc.aux_count = c.partition.num_aux;
  std::vector<std::size_t> frontier(c.partition.total(), 0);
  for (const Gate& g : c.gates) {
    ++rc.per_kind[g.kind];
    if (g.kind == GateKind::CX) ++rc.cnot_count;
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++rc.t_count;
    std::size_t level = 0;
    for (std::uint32_t q : g.qubits) level = std::max(level, frontier[q]);
    ++level;
    for (std::uint32_t q : g.qubits) frontier[q] = level;
    rc.depth = std::max(rc.depth, level);
  }
  return rc;
}

Circuit invert(const Circuit& c) {
  if (c.has_reset()) throw ContainsReset();
  Circuit out;
  out.partition = c.partition;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    out.gates.push_back(Gate{inverse_kind(it->kind), it->qubits});
  const std::size_t n = c.gates.size();
  for (const BlockAnnotation& blk : c.blocks) {
    std::string tag = blk.tag;
    if (tag.rfind("conjv:", 0) == 0) tag = "conjvdg:" + tag.substr(6);
    else if (tag.rfind("conjvdg:", 0) == 0) tag = "conjv:" + tag.substr(8);
    out.blocks.push_back({n - blk.end, n - blk.begin, tag});
  }
  return out;
}

namespace {

// Shorthand used by the expansion tables below.
Gate g1(GateKind k, std::uint32_t q) { return Gate{k, {q}}; }
Gate g2(GateKind k, std::uint32_t a, std::uint32_t b) { return Gate{k, {a, b}}; }

// Six-CNOT Toffoli with the target's final T and H deferred past the
// control-pair correction (same unitary; keeps the tail local to the target).
std::vector<Gate> ccx_expansion(std::uint32_t a, std::uint32_t b, std::uint32_t t) {
  using K = GateKind;
  return {g1(K::H, t),   g2(K::CX, b, t), g1(K::Tdg, t), g2(K::CX, a, t),
          g1(K::T, t),   g2(K::CX, b, t), g1(K::Tdg, t), g2(K::CX, a, t),
          g1(K::T, b),   g2(K::CX, a, b), g1(K::T, a),   g1(K::Tdg, b),
          g2(K::CX, a, b), g1(K::T, t),   g1(K::H, t)};
}

// Ry(pi/4) on q as S H T H Sdg in circuit order (sign picks T vs Tdg).
void push_ry_quarter(std::vector<Gate>& out, std::uint32_t q, bool positive) {
  using K = GateKind;
  out.push_back(g1(K::Sdg, q));
  out.push_back(g1(K::H, q));
  out.push_back(g1(positive ? K::T : K::Tdg, q));
  out.push_back(g1(K::H, q));
  out.push_back(g1(K::S, q));
}

std::vector<Gate> margolus_expansion(std::uint32_t a, std::uint32_t b, std::uint32_t t) {
  std::vector<Gate> out;
  push_ry_quarter(out, t, true);
  out.push_back(g2(GateKind::CX, b, t));
  push_ry_quarter(out, t, true);
  out.push_back(g2(GateKind::CX, a, t));
  push_ry_quarter(out, t, false);
  out.push_back(g2(GateKind::CX, b, t));
  push_ry_quarter(out, t, false);
  return out;
}

std::vector<Gate> rccx_expansion(std::uint32_t a, std::uint32_t b, std::uint32_t t) {
  using K = GateKind;
  return {g1(K::H, t),  g1(K::T, t),   g2(K::CX, b, t), g1(K::Tdg, t),
          g2(K::CX, a, t), g1(K::T, t), g2(K::CX, b, t), g1(K::Tdg, t),
          g1(K::H, t)};
}

std::vector<Gate> rc3x_expansion(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                 std::uint32_t t) {
  using K = GateKind;
  return {g1(K::H, t),  g1(K::T, t),   g2(K::CX, c, t), g1(K::Tdg, t),
          g1(K::H, t),  g2(K::CX, a, t), g1(K::T, t),   g2(K::CX, b, t),
          g1(K::Tdg, t), g2(K::CX, a, t), g1(K::T, t),  g2(K::CX, b, t),
          g1(K::Tdg, t), g1(K::H, t),   g1(K::T, t),   g2(K::CX, c, t),
          g1(K::Tdg, t), g1(K::H, t)};
}

std::vector<Gate> inverted(std::vector<Gate> gates) {
  std::reverse(gates.begin(), gates.end());
  for (Gate& g : gates) g.kind = inverse_kind(g.kind);
  return gates;
}

}  // namespace

std::vector<Gate> gate_expansion(const Gate& g) {
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::CCX:
      return ccx_expansion(q[0], q[1], q[2]);
    case GateKind::Margolus:
      return margolus_expansion(q[0], q[1], q[2]);
    case GateKind::MargolusDg:
      return inverted(margolus_expansion(q[0], q[1], q[2]));
    case GateKind::Rccx:
      return rccx_expansion(q[0], q[1], q[2]);
    case GateKind::RccxDg:
      return inverted(rccx_expansion(q[0], q[1], q[2]));
    case GateKind::Rc3x:
      return rc3x_expansion(q[0], q[1], q[2], q[3]);
    case GateKind::Rc3xDg:
      return inverted(rc3x_expansion(q[0], q[1], q[2], q[3]));
    default:
      return {g};
  }
}

}  // namespace permclass
