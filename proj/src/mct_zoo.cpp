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

#include "permclass/mct_zoo.hpp"

#include <string>

namespace permclass {

namespace {

void annotate_each_gate(Circuit& c, const std::string& tag) {
  for (std::size_t i = 0; i < c.gates.size(); ++i) c.blocks.push_back({i, i + 1, tag});
}

Circuit single_gate_circuit(GateKind kind, std::uint32_t num_qubits,
                            const std::string& tag) {
  Circuit c;
  c.partition = {num_qubits, 0};
  std::vector<std::uint32_t> qs(num_qubits);
  for (std::uint32_t i = 0; i < num_qubits; ++i) qs[i] = i;
  c.gates.push_back(Gate{kind, qs});
  c.blocks.push_back({0, 1, tag});
  validate_circuit(c);
  return c;
}

}  // namespace

Circuit toffoli_strict() {
  Circuit c;
  c.partition = {3, 0};
  c.gates = gate_expansion(Gate{GateKind::CCX, {0, 1, 2}});
  c.blocks.push_back({0, c.gates.size(), "toffoli"});
  validate_circuit(c);
  return c;
}

Circuit relative_toffoli() {
  Circuit c;
  c.partition = {3, 0};
  c.gates = gate_expansion(Gate{GateKind::Margolus, {0, 1, 2}});
  c.blocks.push_back({0, c.gates.size(), "margolus"});
  validate_circuit(c);
  return c;
}

Circuit rccx() { return single_gate_circuit(GateKind::Rccx, 3, "rccx"); }

Circuit rc3x() { return single_gate_circuit(GateKind::Rc3x, 4, "rc3x"); }

Circuit barenco_ladder(std::uint32_t m) {
  if (m < 3) throw TooFewControls("barenco ladder needs at least 3 controls");
  Circuit c;
  c.partition = {m + 1, m - 2};
  const std::uint32_t tgt = m;
  auto ctrl = [](std::uint32_t i) { return i - 1; };          // c_i, 1-based
  auto aux = [m](std::uint32_t j) { return m + j; };          // a_j, 1-based

  const Gate top{GateKind::CCX, {ctrl(m), aux(m - 2), tgt}};
  const Gate bottom{GateKind::CCX, {ctrl(1), ctrl(2), aux(1)}};
  auto rung = [&](std::uint32_t i) {
    return Gate{GateKind::CCX, {ctrl(i), aux(i - 2), aux(i - 1)}};
  };

  auto push_sweep = [&](bool with_top) {
    if (with_top) c.gates.push_back(top);
    for (std::uint32_t i = m - 1; i >= 3; --i) c.gates.push_back(rung(i));
    c.gates.push_back(bottom);
    for (std::uint32_t i = 3; i <= m - 1; ++i) c.gates.push_back(rung(i));
    if (with_top) c.gates.push_back(top);
  };
  push_sweep(true);
  push_sweep(false);

  annotate_each_gate(c, "toffoli");
  // Nested conjugation shells around the second top gate.
  for (std::uint32_t j = 0; j + 3 <= m; ++j) {
    const std::string id = std::to_string(j);
    c.blocks.push_back({m - 2 + j, m - 1 + j, "conjv:" + id});
    c.blocks.push_back({m - 1 + j, 3 * m - 6 - j, "conju:" + id});
    c.blocks.push_back({3 * m - 6 - j, 3 * m - 5 - j, "conjvdg:" + id});
  }
  validate_circuit(c);
  return c;
}

namespace {

struct VChainPlan {
  std::uint32_t k = 0;                 // auxiliary count
  std::vector<Gate> rung_relative;     // rung i at index i-1, relative kinds
  Gate middle{GateKind::CCX, {}};
};

VChainPlan vchain_plan(std::uint32_t m) {
  VChainPlan plan;
  plan.k = (m - 2 + 1) / 2;
  const std::uint32_t tgt = m;
  auto ctrl = [](std::uint32_t i) { return i - 1; };
  auto aux = [m](std::uint32_t j) { return m + j; };

  const bool even = m % 2 == 0;
  if (even)
    plan.rung_relative.push_back(Gate{GateKind::Rc3x, {ctrl(1), ctrl(2), ctrl(3), aux(1)}});
  else
    plan.rung_relative.push_back(Gate{GateKind::Rccx, {ctrl(1), ctrl(2), aux(1)}});
  for (std::uint32_t i = 2; i <= plan.k; ++i) {
    const std::uint32_t first = even ? 2 * i : 2 * i - 1;
    plan.rung_relative.push_back(
        Gate{GateKind::Rc3x, {ctrl(first), ctrl(first + 1), aux(i - 1), aux(i)}});
  }
  plan.middle = Gate{GateKind::CCX, {ctrl(m), aux(plan.k), tgt}};
  return plan;
}

Gate adjoint_gate(const Gate& g) { return Gate{inverse_kind(g.kind), g.qubits}; }

// Strict version of a chain rung (always an RC3X-shaped fold), realized
// through the borrowed target qubit: two Toffolis around a cancelling
// relative-phase pair.
void push_strict_rung(Circuit& c, const Gate& relative_rung, std::uint32_t borrow) {
  const auto& q = relative_rung.qubits;
  const std::size_t base = c.gates.size();
  c.gates.push_back(Gate{GateKind::CCX, {q[2], borrow, q[3]}});
  c.gates.push_back(Gate{GateKind::Rccx, {q[0], q[1], borrow}});
  c.gates.push_back(Gate{GateKind::CCX, {q[2], borrow, q[3]}});
  c.gates.push_back(Gate{GateKind::RccxDg, {q[0], q[1], borrow}});
  for (std::size_t i = 0; i < 4; ++i)
    c.blocks.push_back({base + i, base + i + 1, i % 2 == 0 ? "toffoli" : "rt"});
}

}  // namespace

Circuit vchain(std::uint32_t m, bool dirty) {
  if (m < 4) throw TooFewControls("vchain needs at least 4 controls");
  const VChainPlan plan = vchain_plan(m);
  const std::uint32_t k = plan.k;
  Circuit c;
  c.partition = {m + 1, k};

  if (!dirty) {
    for (std::uint32_t i = 1; i <= k; ++i) c.gates.push_back(plan.rung_relative[i - 1]);
    c.gates.push_back(plan.middle);
    for (std::uint32_t i = k; i >= 1; --i)
      c.gates.push_back(adjoint_gate(plan.rung_relative[i - 1]));
    annotate_each_gate(c, "rt");
    c.blocks[k] = {k, k + std::size_t{1}, "toffoli"};
    for (std::uint32_t i = 1; i <= k; ++i) {
      const std::string id = std::to_string(i);
      c.blocks.push_back({i - 1, i, "conjv:" + id});
      c.blocks.push_back({i, 2 * k + 1 - i, "conju:" + id});
      c.blocks.push_back({2 * k + 1 - i, 2 * k + 2 - i, "conjvdg:" + id});
    }
    validate_circuit(c);
    return c;
  }

  // Two-sweep schedule: relative rungs only in conjugation position, the
  // remaining sweeps strict.
  const std::uint32_t borrow = m;  // target qubit, untouched by the rungs
  auto push_relative = [&](std::uint32_t i, bool dagger) {
    const Gate g = plan.rung_relative[i - 1];
    c.gates.push_back(dagger ? adjoint_gate(g) : g);
    c.blocks.push_back({c.gates.size() - 1, c.gates.size(), "rt"});
  };
  auto push_middle = [&] {
    c.gates.push_back(plan.middle);
    c.blocks.push_back({c.gates.size() - 1, c.gates.size(), "toffoli"});
  };

  std::vector<std::size_t> open_at(k + 1, 0);
  push_middle();
  for (std::uint32_t i = k; i >= 2; --i) push_strict_rung(c, plan.rung_relative[i - 1], borrow);
  for (std::uint32_t i = 1; i <= k; ++i) {
    open_at[i] = c.gates.size();
    push_relative(i, false);
  }
  push_middle();
  for (std::uint32_t i = k; i >= 1; --i) {
    const std::size_t close = c.gates.size();
    push_relative(i, true);
    const std::string id = std::to_string(i);
    c.blocks.push_back({open_at[i], open_at[i] + 1, "conjv:" + id});
    c.blocks.push_back({open_at[i] + 1, close, "conju:" + id});
    c.blocks.push_back({close, close + 1, "conjvdg:" + id});
  }
  for (std::uint32_t i = 2; i <= k; ++i) push_strict_rung(c, plan.rung_relative[i - 1], borrow);
  validate_circuit(c);
  return c;
}

Circuit cwe_mct(std::uint32_t m) {
  if (m < 3) throw TooFewControls("cwe construction needs at least 3 controls");
  Circuit c;
  c.partition = {m + 1, m - 2};
  const std::uint32_t tgt = m;
  auto ctrl = [](std::uint32_t i) { return i - 1; };
  auto aux = [m](std::uint32_t j) { return m + j; };

  c.gates.push_back(Gate{GateKind::Margolus, {ctrl(1), ctrl(2), aux(1)}});
  for (std::uint32_t i = 2; i <= m - 2; ++i)
    c.gates.push_back(Gate{GateKind::Margolus, {ctrl(i + 1), aux(i - 1), aux(i)}});
  c.gates.push_back(Gate{GateKind::Margolus, {ctrl(m), aux(m - 2), tgt}});
  annotate_each_gate(c, "rt");
  validate_circuit(c);
  return c;
}

Circuit dwe_mct(std::uint32_t m) {
  if (m < 3) throw TooFewControls("dwe construction needs at least 3 controls");
  Circuit c;
  c.partition = {m + 1, m - 2};
  const std::uint32_t tgt = m;
  auto ctrl = [](std::uint32_t i) { return i - 1; };
  auto aux = [m](std::uint32_t j) { return m + j; };

  const Gate top{GateKind::Margolus, {ctrl(m), aux(m - 2), tgt}};
  c.gates.push_back(top);
  for (std::uint32_t i = m - 1; i >= 3; --i)
    c.gates.push_back(Gate{GateKind::Margolus, {ctrl(i), aux(i - 2), aux(i - 1)}});
  c.gates.push_back(Gate{GateKind::Margolus, {ctrl(1), ctrl(2), aux(1)}});
  for (std::uint32_t i = 3; i <= m - 1; ++i)
    c.gates.push_back(Gate{GateKind::Margolus, {ctrl(i), aux(i - 2), aux(i - 1)}});
  c.gates.push_back(top);
  annotate_each_gate(c, "rt");
  validate_circuit(c);
  return c;
}

Circuit expand_to_clifford_t(const Circuit& c) {
  Circuit out;
  out.partition = c.partition;
  std::vector<std::size_t> new_index(c.gates.size() + 1, 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    new_index[i] = out.gates.size();
    for (const Gate& g : gate_expansion(c.gates[i])) out.gates.push_back(g);
  }
  new_index[c.gates.size()] = out.gates.size();
  for (const BlockAnnotation& blk : c.blocks)
    out.blocks.push_back({new_index[blk.begin], new_index[blk.end], blk.tag});
  validate_circuit(out);
  return out;
}

}  // namespace permclass
