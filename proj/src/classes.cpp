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

namespace permclass {

namespace {

std::size_t idx(ClassId id) { return static_cast<std::size_t>(id); }

// Reachability under the inclusion order, computed once from the Hasse edges.
const std::array<std::array<bool, kNumClasses>, kNumClasses>& reach_table() {
  static const auto table = [] {
    std::array<std::array<bool, kNumClasses>, kNumClasses> t{};
    for (std::size_t i = 0; i < kNumClasses; ++i) t[i][i] = true;
    for (const auto& [a, b] : lattice_edges()) t[idx(a)][idx(b)] = true;
    for (std::size_t k = 0; k < kNumClasses; ++k)
      for (std::size_t i = 0; i < kNumClasses; ++i)
        for (std::size_t j = 0; j < kNumClasses; ++j)
          if (t[i][k] && t[k][j]) t[i][j] = true;
    return t;
  }();
  return table;
}

}  // namespace

ClassId canonical_label(Phase phase, Ancilla ancilla, Waste waste) {
  if (waste == Waste::WastingEntangled)
    return ancilla == Ancilla::Clean ? ClassId::CWE : ClassId::DWE;
  const bool strict = phase == Phase::Strict;
  const bool clean = ancilla == Ancilla::Clean;
  if (waste == Waste::NonWasting) {
    if (strict) return clean ? ClassId::SCNW : ClassId::SDNW;
    return clean ? ClassId::RCNW : ClassId::RDNW;
  }
  if (strict) return clean ? ClassId::SCWS : ClassId::SDWS;
  return clean ? ClassId::RCWS : ClassId::RDWS;
}

ClassComponents class_components(ClassId id) {
  switch (id) {
    case ClassId::SCNW: return {Phase::Strict, Ancilla::Clean, Waste::NonWasting};
    case ClassId::RCNW: return {Phase::Relative, Ancilla::Clean, Waste::NonWasting};
    case ClassId::SDNW: return {Phase::Strict, Ancilla::Dirty, Waste::NonWasting};
    case ClassId::RDNW: return {Phase::Relative, Ancilla::Dirty, Waste::NonWasting};
    case ClassId::SCWS: return {Phase::Strict, Ancilla::Clean, Waste::WastingSeparable};
    case ClassId::RCWS: return {Phase::Relative, Ancilla::Clean, Waste::WastingSeparable};
    case ClassId::SDWS: return {Phase::Strict, Ancilla::Dirty, Waste::WastingSeparable};
    case ClassId::RDWS: return {Phase::Relative, Ancilla::Dirty, Waste::WastingSeparable};
    case ClassId::CWE: return {Phase::Strict, Ancilla::Clean, Waste::WastingEntangled};
    case ClassId::DWE: return {Phase::Strict, Ancilla::Dirty, Waste::WastingEntangled};
  }
  return {Phase::Strict, Ancilla::Clean, Waste::NonWasting};
}

std::string_view class_name(ClassId id) {
  switch (id) {
    case ClassId::SCNW: return "S-C-NW";
    case ClassId::RCNW: return "R-C-NW";
    case ClassId::SDNW: return "S-D-NW";
    case ClassId::RDNW: return "R-D-NW";
    case ClassId::SCWS: return "S-C-WS";
    case ClassId::RCWS: return "R-C-WS";
    case ClassId::SDWS: return "S-D-WS";
    case ClassId::RDWS: return "R-D-WS";
    case ClassId::CWE: return "C-WE";
    case ClassId::DWE: return "D-WE";
  }
  return "?";
}

std::optional<ClassId> class_from_name(std::string_view name) {
  for (ClassId id : all_classes())
    if (class_name(id) == name) return id;
  return std::nullopt;
}

const std::array<ClassId, kNumClasses>& all_classes() {
  static const std::array<ClassId, kNumClasses> a = {
      ClassId::SCNW, ClassId::RCNW, ClassId::SDNW, ClassId::RDNW,
      ClassId::SCWS, ClassId::RCWS, ClassId::SDWS, ClassId::RDWS,
      ClassId::CWE,  ClassId::DWE};
  return a;
}

bool subset_of(ClassId a, ClassId b) { return reach_table()[idx(a)][idx(b)]; }

const std::vector<std::pair<ClassId, ClassId>>& lattice_edges() {
  using C = ClassId;
  static const std::vector<std::pair<C, C>> edges = {
      {C::SDNW, C::RDNW}, {C::SDNW, C::SCNW}, {C::SDNW, C::SDWS},
      {C::RDNW, C::RCNW}, {C::RDNW, C::RDWS},
      {C::SCNW, C::RCNW}, {C::SCNW, C::SCWS},
      {C::RCNW, C::RCWS},
      {C::SDWS, C::RDWS}, {C::SDWS, C::SCWS}, {C::SDWS, C::DWE},
      {C::RDWS, C::RCWS}, {C::RDWS, C::DWE},
      {C::SCWS, C::RCWS}, {C::SCWS, C::CWE},
      {C::RCWS, C::CWE},
      {C::DWE, C::CWE},
  };
  return edges;
}

std::vector<ClassId> minimal_classes(const std::set<ClassId>& set) {
  std::vector<ClassId> out;
  for (ClassId a : set) {
    bool dominated = false;
    for (ClassId b : set)
      if (b != a && subset_of(b, a)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(a);
  }
  return out;
}

bool is_clean(ClassId id) {
  switch (id) {
    case ClassId::SCNW:
    case ClassId::RCNW:
    case ClassId::SCWS:
    case ClassId::RCWS:
    case ClassId::CWE:
      return true;
    default:
      return false;
  }
}

bool is_strict(ClassId id) {
  switch (id) {
    case ClassId::SCNW:
    case ClassId::SDNW:
    case ClassId::SCWS:
    case ClassId::SDWS:
      return true;
    default:
      return false;
  }
}

bool is_wasting_entangled(ClassId id) {
  return id == ClassId::CWE || id == ClassId::DWE;
}

ClassId clean_closure(ClassId id) {
  switch (id) {
    case ClassId::SDNW: return ClassId::SCNW;
    case ClassId::RDNW: return ClassId::RCNW;
    case ClassId::SDWS: return ClassId::SCWS;
    case ClassId::RDWS: return ClassId::RCWS;
    case ClassId::DWE: return ClassId::CWE;
    default:
      return id;
  }
}

}  // namespace permclass
