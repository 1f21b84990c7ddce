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

#include "doctest.h"
#include "permclass/mct_zoo.hpp"
#include "permclass/unitary.hpp"
#include "test_helpers.hpp"

using namespace permclass;

TEST_SUITE_BEGIN("circuit");

TEST_CASE("validation rejects malformed gates") {
  Circuit c;
  c.partition = {3, 0};
  c.gates.push_back(Gate{GateKind::CCX, {0, 0, 1}});
  CHECK_THROWS_AS(validate_circuit(c), InvalidCircuit);

  c.gates[0] = Gate{GateKind::CX, {0, 5}};
  CHECK_THROWS_AS(validate_circuit(c), InvalidCircuit);

  c.gates[0] = Gate{GateKind::CX, {0, 1}};
  CHECK_NOTHROW(validate_circuit(c));
}

TEST_CASE("reset is restricted to a trailing suffix on auxiliary qubits") {
  Circuit c;
  c.partition = {2, 1};
  c.gates = {Gate{GateKind::CX, {0, 1}}, Gate{GateKind::Reset, {2}}};
  CHECK_NOTHROW(validate_circuit(c));

  c.gates = {Gate{GateKind::Reset, {2}}, Gate{GateKind::CX, {0, 1}}};
  CHECK_THROWS_AS(validate_circuit(c), InvalidCircuit);

  c.gates = {Gate{GateKind::Reset, {0}}};
  CHECK_THROWS_AS(validate_circuit(c), InvalidCircuit);
}

TEST_CASE("block annotations must be laminar") {
  Circuit c;
  c.partition = {3, 0};
  c.gates = {Gate{GateKind::X, {0}}, Gate{GateKind::X, {1}}, Gate{GateKind::X, {2}},
             Gate{GateKind::X, {0}}};
  c.blocks = {{0, 2, "a"}, {1, 3, "b"}};
  CHECK_THROWS_AS(validate_circuit(c), InvalidCircuit);
  c.blocks = {{0, 4, "a"}, {1, 3, "b"}, {1, 2, "c"}};
  CHECK_NOTHROW(validate_circuit(c));
}

TEST_CASE("resource counts on the empty circuit are all zero") {
  Circuit c;
  c.partition = {2, 0};
  const ResourceCounts rc = resource_counts(c);
  CHECK(rc.total_gates() == 0);
  CHECK(rc.depth == 0);
  CHECK(rc.cnot_count == 0);
  CHECK(rc.t_count == 0);
}

TEST_CASE("expanded rccx counts 3 CNOTs") {
  Circuit c;
  c.partition = {3, 0};
  c.gates = {Gate{GateKind::Rccx, {0, 1, 2}}};
  const ResourceCounts rc = resource_counts(expand_to_clifford_t(c));
  CHECK(rc.cnot_count == 3);
}

TEST_CASE("barenco ladder tallies only Toffolis") {
  const Circuit c = barenco_ladder(5);
  const ResourceCounts rc = resource_counts(c);
  CHECK(rc.kind(GateKind::CCX) == c.gates.size());
  CHECK(c.gates.size() == 12);
}

TEST_CASE("depth parallelizes disjoint gates") {
  Circuit c;
  c.partition = {4, 0};
  c.gates = {Gate{GateKind::X, {0}}, Gate{GateKind::X, {1}}};
  CHECK(resource_counts(c).depth == 1);
  c.gates.push_back(Gate{GateKind::CX, {0, 1}});
  CHECK(resource_counts(c).depth == 2);
  c.gates.push_back(Gate{GateKind::CX, {2, 3}});
  CHECK(resource_counts(c).depth == 2);
}

TEST_CASE("tallies add under concatenation, depth is subadditive") {
  auto rng = testing::make_rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit a = testing::random_circuit(4, 12, rng);
    const Circuit b = testing::random_circuit(4, 9, rng);
    Circuit ab = a;
    ab.gates.insert(ab.gates.end(), b.gates.begin(), b.gates.end());
    const ResourceCounts ra = resource_counts(a);
    const ResourceCounts rb = resource_counts(b);
    const ResourceCounts rab = resource_counts(ab);
    CHECK(rab.total_gates() == ra.total_gates() + rb.total_gates());
    CHECK(rab.cnot_count == ra.cnot_count + rb.cnot_count);
    CHECK(rab.t_count == ra.t_count + rb.t_count);
    CHECK(rab.depth <= ra.depth + rb.depth);
  }
}

TEST_CASE("invert is an involution and refuses RESET") {
  auto rng = testing::make_rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = testing::random_circuit(4, 15, rng);
    CHECK(invert(invert(c)) == c);
  }
  Circuit single;
  single.partition = {3, 0};
  single.gates = {Gate{GateKind::CCX, {0, 1, 2}}};
  CHECK(invert(single).gates == single.gates);

  Circuit with_reset;
  with_reset.partition = {1, 1};
  with_reset.gates = {Gate{GateKind::Reset, {1}}};
  CHECK_THROWS_AS(invert(with_reset), ContainsReset);
}

TEST_CASE("inverted circuit realizes the adjoint unitary") {
  auto rng = testing::make_rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const Circuit c = testing::random_circuit(4, 20, rng);
    const Matrix u = unitary_of(c);
    const Matrix v = unitary_of(invert(c));
    CHECK(max_abs_diff(v, u.adjoint()) < 1e-10);
  }
}

TEST_SUITE_END();
