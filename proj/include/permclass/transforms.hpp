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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permclass/classifier.hpp"

namespace permclass {

enum class PassId {
  T1BoundaryRelative,
  T2ConjugationRelative,
  T3WastingElision,
  T4CleanControlSimplify,
  T5TailAuxRemoval,
  T6ResetFinalize,
};

std::string_view pass_name(PassId id);
std::optional<PassId> pass_from_name(std::string_view name);

/// Machine-readable diff of one rewrite.
struct PassOutcome {
  Circuit circuit;
  /// Gate-index ranges of the input that were deleted.
  std::vector<std::pair<std::size_t, std::size_t>> removed;
  /// Gate indices of the input that were substituted in place.
  std::vector<std::size_t> substituted;
  std::vector<std::string> diagnostics;
};

/// T1: replace the leading/trailing runs of permutation gates with their
/// relative-phase versions (CCX -> Margolus, MCX(3) -> RC3X).
PassOutcome t1_boundary_relative(const Circuit& c);

/// T2: inside annotated conjv/conju/conjvdg triples whose V qubits are
/// controls of U or ignored by U, replace V and V^dag with relative versions.
/// Preserves the circuit unitary exactly.
PassOutcome t2_conjugation_relative(const Circuit& c);

/// T3: drop the maximal trailing run of blocks that touch main qubits only as
/// controls (or not at all).
PassOutcome t3_wasting_elision(const Circuit& c);

/// T4: with clean auxiliaries, delete gates that act as the identity because
/// an auxiliary control is still |0>; with non_wasting also from the end,
/// where auxiliaries are guaranteed to return to |0>.
PassOutcome t4_clean_control_simplify(const Circuit& c, bool non_wasting);

/// T5: drop the maximal trailing run of gates acting solely on the auxiliary
/// system.
PassOutcome t5_tail_aux_removal(const Circuit& c);

/// T6: append a RESET on every auxiliary qubit (idempotent).
PassOutcome t6_reset_finalize(const Circuit& c);

/// Class the pass guarantees for a given input class; empty when the pass
/// precondition excludes that class.
std::optional<ClassId> guaranteed_class(PassId pass, ClassId input);

struct PipelineStage {
  PassId pass;
  ClassId guaranteed;
  ResourceCounts counts_before;
  ResourceCounts counts_after;
  std::vector<std::pair<std::size_t, std::size_t>> removed;
  std::vector<std::size_t> substituted;
  std::vector<std::string> diagnostics;
};

struct PipelineResult {
  Circuit circuit;
  ClassId guaranteed;
  std::vector<PipelineStage> stages;
  VerificationReport report;
};

/// Sequential pass application with class tracking; the first pass whose
/// precondition rejects the tracked class aborts with the stage index.
PipelineResult run_pipeline(const Circuit& c, const Permutation& p,
                            std::span<const PassId> passes, ClassId input_class,
                            const Tolerances& tol = {});

}  // namespace permclass
