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

#include "permclass/classes.hpp"

#include <set>

#include "doctest.h"

using namespace permclass;

TEST_SUITE_BEGIN("classes");

TEST_CASE("twelve raw triples collapse onto exactly ten labels") {
  std::set<ClassId> seen;
  int raw = 0;
  for (Phase ph : {Phase::Strict, Phase::Relative})
    for (Ancilla an : {Ancilla::Clean, Ancilla::Dirty})
      for (Waste wa : {Waste::NonWasting, Waste::WastingSeparable,
                       Waste::WastingEntangled}) {
        seen.insert(canonical_label(ph, an, wa));
        ++raw;
      }
  CHECK(raw == 12);
  CHECK(seen.size() == 10);

  CHECK(canonical_label(Phase::Strict, Ancilla::Clean, Waste::WastingEntangled) ==
        canonical_label(Phase::Relative, Ancilla::Clean, Waste::WastingEntangled));
  CHECK(canonical_label(Phase::Strict, Ancilla::Dirty, Waste::WastingEntangled) ==
        canonical_label(Phase::Relative, Ancilla::Dirty, Waste::WastingEntangled));
  CHECK(canonical_label(Phase::Strict, Ancilla::Clean, Waste::NonWasting) ==
        ClassId::SCNW);
}

TEST_CASE("canonical_label is idempotent on canonical representatives") {
  for (ClassId id : all_classes()) {
    const ClassComponents c = class_components(id);
    CHECK(canonical_label(c.phase, c.ancilla, c.waste) == id);
  }
}

TEST_CASE("order matches the stated inclusions") {
  // Strict within relative, dirty within clean, NW within WS within WE.
  CHECK(subset_of(ClassId::SCNW, ClassId::RCNW));
  CHECK(subset_of(ClassId::SDNW, ClassId::SCNW));
  CHECK(subset_of(ClassId::SCNW, ClassId::SCWS));
  CHECK(subset_of(ClassId::SCWS, ClassId::CWE));
  CHECK(subset_of(ClassId::SDWS, ClassId::DWE));
  CHECK(subset_of(ClassId::DWE, ClassId::CWE));
  CHECK(subset_of(ClassId::RDNW, ClassId::RCWS));

  CHECK(!subset_of(ClassId::RCNW, ClassId::SCNW));
  CHECK(!subset_of(ClassId::CWE, ClassId::DWE));
  CHECK(!subset_of(ClassId::SCNW, ClassId::SDNW));
  CHECK(!subset_of(ClassId::DWE, ClassId::RCWS));
  CHECK(!subset_of(ClassId::RCWS, ClassId::DWE));
}

TEST_CASE("reachability is a partial order with S-D-NW as unique minimum") {
  for (ClassId a : all_classes())
    for (ClassId b : all_classes())
      if (a != b) CHECK(!(subset_of(a, b) && subset_of(b, a)));
  for (ClassId a : all_classes())
    for (ClassId b : all_classes())
      for (ClassId c : all_classes())
        if (subset_of(a, b) && subset_of(b, c)) CHECK(subset_of(a, c));
  for (ClassId a : all_classes()) {
    CHECK(subset_of(ClassId::SDNW, a));
    CHECK(subset_of(a, ClassId::CWE));
  }
}

TEST_CASE("minimal classes form an antichain") {
  std::set<ClassId> members;
  for (ClassId a : all_classes())
    if (subset_of(ClassId::SDNW, a)) members.insert(a);
  auto minimal = minimal_classes(members);
  REQUIRE(minimal.size() == 1);
  CHECK(minimal[0] == ClassId::SDNW);

  const std::set<ClassId> two = {ClassId::RCNW, ClassId::SCWS, ClassId::RCWS,
                                 ClassId::CWE};
  minimal = minimal_classes(two);
  CHECK(minimal.size() == 2);
}

TEST_CASE("names round trip") {
  for (ClassId id : all_classes()) {
    auto back = class_from_name(class_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(class_name(ClassId::CWE) == "C-WE");
  CHECK(!class_from_name("S-C-XX").has_value());
}

TEST_SUITE_END();
