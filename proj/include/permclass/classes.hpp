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

#include <array>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace permclass {

enum class Phase { Strict, Relative };
enum class Ancilla { Clean, Dirty };
enum class Waste { NonWasting, WastingSeparable, WastingEntangled };

/// The ten canonical implementation classes. Strict and relative collapse for
/// the wasting-entangled labels, so twelve raw triples map onto these ten.
enum class ClassId : std::uint8_t {
  SCNW,
  RCNW,
  SDNW,
  RDNW,
  SCWS,
  RCWS,
  SDWS,
  RDWS,
  CWE,
  DWE,
};

inline constexpr std::size_t kNumClasses = 10;

ClassId canonical_label(Phase phase, Ancilla ancilla, Waste waste);

struct ClassComponents {
  Phase phase;
  Ancilla ancilla;
  Waste waste;
};

/// Canonical representative triple of a label (wasting-entangled labels
/// report Strict).
ClassComponents class_components(ClassId id);

std::string_view class_name(ClassId id);
std::optional<ClassId> class_from_name(std::string_view name);

const std::array<ClassId, kNumClasses>& all_classes();

/// Inclusion a <= b: every unitary in class a also belongs to class b.
bool subset_of(ClassId a, ClassId b);

/// Directed edges of the Hasse diagram (smaller class -> larger class).
const std::vector<std::pair<ClassId, ClassId>>& lattice_edges();

/// Members of `set` with no strictly smaller member also in `set`.
std::vector<ClassId> minimal_classes(const std::set<ClassId>& set);

bool is_clean(ClassId id);
bool is_strict(ClassId id);
bool is_wasting_entangled(ClassId id);

/// Smallest clean class containing `id` (e.g. S-D-NW -> S-C-NW, D-WE -> C-WE).
ClassId clean_closure(ClassId id);

}  // namespace permclass
