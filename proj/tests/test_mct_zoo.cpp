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

#include "doctest.h"
#include "permclass/classifier.hpp"
#include "test_helpers.hpp"

using namespace permclass;

namespace {

void check_minimal(const Circuit& c, std::uint32_t num_controls, ClassId expected) {
  const VerificationReport report =
      classify_circuit(c, mct_permutation(num_controls));
  REQUIRE(report.minimal.size() == 1);
  CHECK(report.minimal[0] == expected);
}

// For strict or relative permutation circuits: sweep every basis state and
// confirm the main register lands on the MCT image, with dirty circuits also
// restoring/retaining nothing they should not.
void boolean_mct_sweep(const Circuit& c, std::uint32_t num_controls,
                       bool expect_aux_restored) {
  const std::uint32_t total = c.partition.total();
  const std::uint32_t aux_bits = c.partition.num_aux;
  const Permutation p = mct_permutation(num_controls);
  for (std::size_t basis = 0; basis < (std::size_t{1} << total); ++basis) {
    const std::size_t out = testing::boolean_apply(c, basis);
    const std::size_t main_in = basis >> aux_bits;
    const std::size_t aux_in = basis & ((std::size_t{1} << aux_bits) - 1);
    CHECK((out >> aux_bits) == p(main_in));
    if (expect_aux_restored)
      CHECK((out & ((std::size_t{1} << aux_bits) - 1)) == aux_in);
  }
}

}  // namespace

TEST_SUITE_BEGIN("mct_zoo");

TEST_CASE("toffoli_strict: six CNOTs, seven T gates, exact CCX") {
  const Circuit c = toffoli_strict();
  const ResourceCounts rc = resource_counts(c);
  CHECK(rc.cnot_count == 6);
  CHECK(rc.t_count == 7);
  Circuit ccx;
  ccx.partition = {3, 0};
  ccx.gates = {Gate{GateKind::CCX, {0, 1, 2}}};
  CHECK(max_abs_diff(unitary_of(c), unitary_of(ccx)) < 1e-12);
  check_minimal(c, 2, ClassId::SDNW);
}

TEST_CASE("relative_toffoli: three CNOTs, relative but not strict") {
  const Circuit c = relative_toffoli();
  CHECK(resource_counts(c).cnot_count == 3);
  const Matrix u = unitary_of(c);
  Circuit ccx;
  ccx.partition = {3, 0};
  ccx.gates = {Gate{GateKind::CCX, {0, 1, 2}}};
  const Matrix u_ccx = unitary_of(ccx);
  CHECK(max_abs_diff(elementwise_abs(u), u_ccx) < 1e-12);
  CHECK(max_abs_diff(u, u_ccx) > 0.5);
  check_minimal(c, 2, ClassId::RDNW);

  // Composing with its inverse gives the identity.
  Circuit round = c;
  const Circuit inv = invert(c);
  round.gates.insert(round.gates.end(), inv.gates.begin(), inv.gates.end());
  CHECK(max_abs_diff(unitary_of(round), Matrix::Identity(8, 8)) < 1e-12);
}

TEST_CASE("the Margolus matrix flips sign exactly on |101>") {
  const Matrix u = unitary_of(relative_toffoli());
  Matrix expected = Matrix::Identity(8, 8);
  expected(5, 5) = -1.0;
  expected(6, 6) = expected(7, 7) = 0.0;
  expected(6, 7) = expected(7, 6) = 1.0;
  CHECK(max_abs_diff(u, expected) < 1e-12);
}

TEST_CASE("rccx and rc3x match their strict permutations in modulus") {
  check_minimal(rccx(), 2, ClassId::RDNW);
  check_minimal(rc3x(), 3, ClassId::RDNW);
  CHECK(max_abs_diff(elementwise_abs(unitary_of(rccx())),
                     permutation_matrix(mct_permutation(2))) < 1e-12);
  CHECK(max_abs_diff(elementwise_abs(unitary_of(rc3x())),
                     permutation_matrix(mct_permutation(3))) < 1e-12);
}

TEST_CASE("barenco ladder") {
  SUBCASE("three controls: one auxiliary, four Toffolis") {
    const Circuit c = barenco_ladder(3);
    CHECK(c.partition.num_aux == 1);
    CHECK(c.gates.size() == 4);
    check_minimal(c, 3, ClassId::SDNW);
  }

  SUBCASE("five controls: the two-sweep twelve-Toffoli layout") {
    const Circuit c = barenco_ladder(5);
    REQUIRE(c.gates.size() == 12);
    // Qubits: controls 0..4, target 5, auxiliaries 6..8.
    const std::vector<Gate> expected = {
        Gate{GateKind::CCX, {4, 8, 5}}, Gate{GateKind::CCX, {3, 7, 8}},
        Gate{GateKind::CCX, {2, 6, 7}}, Gate{GateKind::CCX, {0, 1, 6}},
        Gate{GateKind::CCX, {2, 6, 7}}, Gate{GateKind::CCX, {3, 7, 8}},
        Gate{GateKind::CCX, {4, 8, 5}}, Gate{GateKind::CCX, {3, 7, 8}},
        Gate{GateKind::CCX, {2, 6, 7}}, Gate{GateKind::CCX, {0, 1, 6}},
        Gate{GateKind::CCX, {2, 6, 7}}, Gate{GateKind::CCX, {3, 7, 8}},
    };
    CHECK(c.gates == expected);
    check_minimal(c, 5, ClassId::SDNW);
  }

  SUBCASE("restores dirty auxiliaries for every basis state") {
    for (std::uint32_t m : {3u, 4u, 5u})
      boolean_mct_sweep(barenco_ladder(m), m, /*expect_aux_restored=*/true);
  }

  SUBCASE("too few controls") {
    CHECK_THROWS_AS(barenco_ladder(2), TooFewControls);
  }
}

TEST_CASE("vchain") {
  SUBCASE("auxiliary counts follow ceil((n-3)/2)") {
    CHECK(vchain(4, false).partition.num_aux == 1);
    CHECK(vchain(5, false).partition.num_aux == 2);
    CHECK(vchain(6, false).partition.num_aux == 2);
    CHECK(vchain(7, false).partition.num_aux == 3);
    CHECK_THROWS_AS(vchain(3, false), TooFewControls);
  }

  SUBCASE("clean variant: minimal class S-C-NW") {
    for (std::uint32_t m : {4u, 5u}) check_minimal(vchain(m, false), m, ClassId::SCNW);
  }

  SUBCASE("dirty variant: minimal class S-D-NW, dirty sweep restores") {
    for (std::uint32_t m : {4u, 5u}) {
      const Circuit c = vchain(m, true);
      check_minimal(c, m, ClassId::SDNW);
      boolean_mct_sweep(c, m, /*expect_aux_restored=*/true);
    }
  }

  SUBCASE("clean variant is not dirty-safe") {
    const VerificationReport report =
        classify_circuit(vchain(4, false), mct_permutation(4));
    CHECK(report.member(ClassId::SCNW));
    CHECK(!report.member(ClassId::SDNW));
    CHECK(!report.member(ClassId::DWE));
  }

  SUBCASE("clean variant expanded counts (n = controls + 1)") {
    for (std::uint32_t m : {4u, 5u, 6u, 7u}) {
      const std::size_t n = m + 1;
      const ResourceCounts rc = resource_counts(expand_to_clifford_t(vchain(m, false)));
      CHECK(rc.t_count == 8 * n - 17);
      CHECK(rc.cnot_count == 6 * n - 12);
      CHECK(rc.kind(GateKind::H) == 4 * n - 10);
    }
  }
}

TEST_CASE("cwe construction: minimal class C-WE") {
  for (std::uint32_t m : {3u, 4u, 5u}) {
    const Circuit c = cwe_mct(m);
    CHECK(c.gates.size() == m - 1);
    check_minimal(c, m, ClassId::CWE);
  }
  CHECK_THROWS_AS(cwe_mct(2), TooFewControls);
}

TEST_CASE("dwe construction: minimal class D-WE") {
  for (std::uint32_t m : {3u, 4u, 5u}) {
    const Circuit c = dwe_mct(m);
    CHECK(c.gates.size() == 2 * m - 3);
    check_minimal(c, m, ClassId::DWE);
    // Main register reaches pi(b) for every auxiliary basis input.
    boolean_mct_sweep(c, m, /*expect_aux_restored=*/false);
  }
}

TEST_CASE("expansion preserves the unitary") {
  for (const Circuit& c : {barenco_ladder(3), vchain(4, false), cwe_mct(3)}) {
    const Circuit e = expand_to_clifford_t(c);
    CHECK(max_abs_diff(unitary_of(c), unitary_of(e)) < 1e-12);
    for (const Gate& g : e.gates) {
      CHECK(!is_relative_phase(g.kind));
      CHECK(g.kind != GateKind::CCX);
    }
  }
}

TEST_SUITE_END();
