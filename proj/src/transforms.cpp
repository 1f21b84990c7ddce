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

#include "permclass/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace permclass {

std::string_view pass_name(PassId id) {
  switch (id) {
    case PassId::T1BoundaryRelative: return "t1";
    case PassId::T2ConjugationRelative: return "t2";
    case PassId::T3WastingElision: return "t3";
    case PassId::T4CleanControlSimplify: return "t4";
    case PassId::T5TailAuxRemoval: return "t5";
    case PassId::T6ResetFinalize: return "t6";
  }
  return "?";
}

std::optional<PassId> pass_from_name(std::string_view name) {
  if (name == "t1") return PassId::T1BoundaryRelative;
  if (name == "t2") return PassId::T2ConjugationRelative;
  if (name == "t3") return PassId::T3WastingElision;
  if (name == "t4") return PassId::T4CleanControlSimplify;
  if (name == "t5") return PassId::T5TailAuxRemoval;
  if (name == "t6") return PassId::T6ResetFinalize;
  return std::nullopt;
}

namespace {

// Substitutable strict gates and their registered relative versions.
std::optional<GateKind> boundary_relative_kind(const Gate& g) {
  if (g.kind == GateKind::CCX) return GateKind::Margolus;
  if (g.kind == GateKind::Mcx && g.qubits.size() == 4) return GateKind::Rc3x;
  return std::nullopt;
}

// True when the gate preserves q's computational-basis value: q sits in a
// control slot or the gate is diagonal.
bool control_only(const Gate& g, std::uint32_t q) {
  if (is_diagonal(g.kind)) return true;
  const std::size_t nc = g.num_controls();
  for (std::size_t i = 0; i < nc; ++i)
    if (g.qubits[i] == q) return true;
  return false;
}

bool uses_qubit(const Gate& g, std::uint32_t q) {
  return std::find(g.qubits.begin(), g.qubits.end(), q) != g.qubits.end();
}

// Rebuild a circuit keeping the flagged gates, remapping block annotations
// and dropping the ones left empty.
Circuit remove_gates(const Circuit& c, const std::vector<bool>& keep) {
  Circuit out;
  out.partition = c.partition;
  std::vector<std::size_t> new_pos(c.gates.size() + 1, 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    new_pos[i] = out.gates.size();
    if (keep[i]) out.gates.push_back(c.gates[i]);
  }
  new_pos[c.gates.size()] = out.gates.size();
  for (const BlockAnnotation& blk : c.blocks) {
    const std::size_t b = new_pos[blk.begin];
    const std::size_t e = new_pos[blk.end];
    if (b < e) out.blocks.push_back({b, e, blk.tag});
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ranges_of_dropped(
    const std::vector<bool>& keep) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0;
  while (i < keep.size()) {
    if (keep[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < keep.size() && !keep[j]) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

// Gate may sit inside a T1 boundary run: permutation gates, relative-phase
// gates and diagonals all realize (generalized) permutations.
bool t1_run_member(const Gate& g) {
  return is_strict_permutation(g.kind) || is_relative_phase(g.kind) ||
         is_diagonal(g.kind);
}

}  // namespace

PassOutcome t1_boundary_relative(const Circuit& c) {
  PassOutcome out;
  out.circuit = c;
  std::size_t prefix_end = 0;
  while (prefix_end < c.gates.size() && t1_run_member(c.gates[prefix_end]))
    ++prefix_end;
  std::size_t suffix_begin = c.gates.size();
  while (suffix_begin > prefix_end && t1_run_member(c.gates[suffix_begin - 1]))
    --suffix_begin;

  auto substitute = [&](std::size_t i) {
    if (auto relative = boundary_relative_kind(c.gates[i])) {
      out.circuit.gates[i].kind = *relative;
      out.substituted.push_back(i);
    }
  };
  for (std::size_t i = 0; i < prefix_end; ++i) substitute(i);
  for (std::size_t i = suffix_begin; i < c.gates.size(); ++i) substitute(i);

  if (out.substituted.empty())
    out.diagnostics.push_back(
        "NoEligibleBlocks: no strict permutation gates in the boundary runs");
  return out;
}

PassOutcome t2_conjugation_relative(const Circuit& c) {
  PassOutcome out;
  out.circuit = c;

  struct Triple {
    const BlockAnnotation* v = nullptr;
    const BlockAnnotation* u = nullptr;
    const BlockAnnotation* vdg = nullptr;
  };
  std::map<std::string, Triple> triples;
  for (const BlockAnnotation& blk : c.blocks) {
    if (blk.tag.rfind("conjv:", 0) == 0) triples[blk.tag.substr(6)].v = &blk;
    else if (blk.tag.rfind("conju:", 0) == 0) triples[blk.tag.substr(6)].u = &blk;
    else if (blk.tag.rfind("conjvdg:", 0) == 0) triples[blk.tag.substr(8)].vdg = &blk;
  }

  for (const auto& [id, triple] : triples) {
    if (!triple.v || !triple.u || !triple.vdg ||
        triple.v->end != triple.u->begin || triple.u->end != triple.vdg->begin) {
      out.diagnostics.push_back("IneligibleTriple " + id + ": malformed annotation");
      continue;
    }
    const std::size_t len = triple.v->end - triple.v->begin;
    if (triple.vdg->end - triple.vdg->begin != len) {
      out.diagnostics.push_back("IneligibleTriple " + id + ": V and Vdg lengths differ");
      continue;
    }

    // V must be a permutation subcircuit mirrored exactly by Vdg.
    bool mirrored = true;
    bool v_is_permutation = true;
    for (std::size_t j = 0; j < len; ++j) {
      const Gate& v_gate = c.gates[triple.v->begin + j];
      const Gate& vdg_gate = c.gates[triple.vdg->begin + (len - 1 - j)];
      if (!is_strict_permutation(v_gate.kind) && !is_relative_phase(v_gate.kind))
        v_is_permutation = false;
      if (vdg_gate.kind != inverse_kind(v_gate.kind) || vdg_gate.qubits != v_gate.qubits)
        mirrored = false;
    }
    if (!v_is_permutation || !mirrored) {
      out.diagnostics.push_back("IneligibleTriple " + id + ": V is not a mirrored permutation block");
      continue;
    }

    // Every qubit of V must be a control of U or ignored by U.
    std::set<std::uint32_t> v_qubits;
    for (std::size_t j = 0; j < len; ++j)
      for (std::uint32_t q : c.gates[triple.v->begin + j].qubits) v_qubits.insert(q);
    bool eligible = true;
    for (std::size_t g = triple.u->begin; g < triple.u->end && eligible; ++g)
      for (std::uint32_t q : v_qubits)
        if (uses_qubit(c.gates[g], q) && !control_only(c.gates[g], q)) {
          eligible = false;
          break;
        }
    if (!eligible) {
      out.diagnostics.push_back("IneligibleTriple " + id +
                                ": a V qubit is targeted inside U");
      continue;
    }

    bool substituted_any = false;
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t vi = triple.v->begin + j;
      if (auto relative = boundary_relative_kind(c.gates[vi])) {
        const std::size_t wi = triple.vdg->begin + (len - 1 - j);
        out.circuit.gates[vi].kind = *relative;
        out.circuit.gates[wi].kind = inverse_kind(*relative);
        out.substituted.push_back(vi);
        out.substituted.push_back(wi);
        substituted_any = true;
      }
    }
    if (!substituted_any)
      out.diagnostics.push_back("triple " + id + ": already relative, nothing to do");
  }

  if (out.substituted.empty() && out.diagnostics.empty())
    out.diagnostics.push_back("no conjugation triples annotated");
  std::sort(out.substituted.begin(), out.substituted.end());
  return out;
}

namespace {

// Outermost non-conjugation block ending exactly at `end`, if any.
const BlockAnnotation* unit_ending_at(const Circuit& c, std::size_t end) {
  const BlockAnnotation* best = nullptr;
  for (const BlockAnnotation& blk : c.blocks) {
    if (blk.end != end || blk.tag.rfind("conj", 0) == 0) continue;
    if (!best || blk.begin < best->begin) best = &blk;
  }
  return best;
}

}  // namespace

PassOutcome t3_wasting_elision(const Circuit& c) {
  PassOutcome out;
  std::size_t cut = c.gates.size();
  while (cut > 0) {
    const BlockAnnotation* blk = unit_ending_at(c, cut);
    const std::size_t begin = blk ? blk->begin : cut - 1;
    bool removable = true;
    for (std::size_t i = begin; i < cut && removable; ++i)
      for (std::uint32_t q : c.gates[i].qubits)
        if (!c.partition.is_aux(q) && !control_only(c.gates[i], q)) {
          removable = false;
          break;
        }
    if (!removable) break;
    cut = begin;
  }

  std::vector<bool> keep(c.gates.size(), true);
  for (std::size_t i = cut; i < c.gates.size(); ++i) keep[i] = false;
  out.circuit = remove_gates(c, keep);
  out.removed = ranges_of_dropped(keep);
  if (out.removed.empty())
    out.diagnostics.push_back("no trailing main-control-only blocks");
  return out;
}

namespace {

// One direction of the clean-control scan. `zero` tracks auxiliary qubits
// whose state is exactly |0> at the scan point (forward: from the clean
// start; backward: from the guaranteed |0> ending).
std::vector<bool> clean_scan(const Circuit& c, bool forward) {
  std::set<std::uint32_t> zero;
  for (std::uint32_t q = c.partition.num_main; q < c.partition.total(); ++q)
    zero.insert(q);

  std::vector<bool> keep(c.gates.size(), true);
  const std::size_t n = c.gates.size();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = forward ? step : n - 1 - step;
    const Gate& g = c.gates[i];

    if (g.kind == GateKind::Reset) {
      if (forward) zero.insert(g.qubits[0]);
      else zero.erase(g.qubits[0]);
      continue;
    }

    const std::size_t nc = g.num_controls();
    bool zero_control = false;
    for (std::size_t j = 0; j < nc; ++j)
      if (zero.count(g.qubits[j])) zero_control = true;

    if (is_strict_permutation(g.kind) && nc > 0 && zero_control) {
      keep[i] = false;  // identity: some control is |0>
      continue;
    }
    if (is_diagonal(g.kind)) {
      bool zero_qubit = false;
      for (std::uint32_t q : g.qubits)
        if (zero.count(q)) zero_qubit = true;
      if (zero_qubit) {
        keep[i] = false;  // diagonal acting on |0> is the identity there
        continue;
      }
      continue;  // diagonal gates never change basis values
    }
    // The gate executes; targets lose their |0> guarantee unless a |0>
    // control blocks the flip.
    const bool flips = !(nc > 0 && zero_control);
    if (flips || g.kind == GateKind::H)
      for (std::size_t j = nc; j < g.qubits.size(); ++j) zero.erase(g.qubits[j]);
  }
  return keep;
}

}  // namespace

PassOutcome t4_clean_control_simplify(const Circuit& c, bool non_wasting) {
  PassOutcome out;
  std::vector<bool> keep = clean_scan(c, /*forward=*/true);
  Circuit forward_result = remove_gates(c, keep);

  std::vector<bool> overall = keep;
  if (non_wasting) {
    const std::vector<bool> keep_back = clean_scan(forward_result, /*forward=*/false);
    // Map the backward deletions onto original indices.
    std::size_t fwd = 0;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      if (!overall[i]) continue;
      if (!keep_back[fwd]) overall[i] = false;
      ++fwd;
    }
    forward_result = remove_gates(forward_result, keep_back);
  }
  out.circuit = std::move(forward_result);
  out.removed = ranges_of_dropped(overall);
  if (out.removed.empty())
    out.diagnostics.push_back("no deletable zero-controlled gates");
  return out;
}

PassOutcome t5_tail_aux_removal(const Circuit& c) {
  PassOutcome out;
  std::size_t cut = c.gates.size();
  while (cut > 0) {
    const Gate& g = c.gates[cut - 1];
    if (g.kind == GateKind::Reset) break;
    bool aux_only = true;
    for (std::uint32_t q : g.qubits)
      if (!c.partition.is_aux(q)) aux_only = false;
    if (!aux_only) break;
    --cut;
  }
  std::vector<bool> keep(c.gates.size(), true);
  for (std::size_t i = cut; i < c.gates.size(); ++i) keep[i] = false;
  out.circuit = remove_gates(c, keep);
  out.removed = ranges_of_dropped(keep);
  if (out.removed.empty())
    out.diagnostics.push_back("no trailing auxiliary-only gates");
  return out;
}

PassOutcome t6_reset_finalize(const Circuit& c) {
  PassOutcome out;
  const std::size_t suffix = c.reset_suffix_begin();
  std::vector<bool> keep(c.gates.size(), true);
  for (std::size_t i = suffix; i < c.gates.size(); ++i) keep[i] = false;
  out.circuit = remove_gates(c, keep);
  for (std::uint32_t q = c.partition.num_main; q < c.partition.total(); ++q)
    out.circuit.gates.push_back(Gate{GateKind::Reset, {q}});
  return out;
}

std::optional<ClassId> guaranteed_class(PassId pass, ClassId input) {
  using C = ClassId;
  switch (pass) {
    case PassId::T1BoundaryRelative:
      switch (input) {
        case C::SCNW:
        case C::RCNW:
          return C::RCNW;
        case C::SCWS:
        case C::RCWS:
        case C::CWE:
          return C::CWE;
        default:
          return C::DWE;
      }
    case PassId::T2ConjugationRelative:
      return input;
    case PassId::T3WastingElision:
      return is_clean(input) ? C::CWE : C::DWE;
    case PassId::T4CleanControlSimplify:
      return clean_closure(input);
    case PassId::T5TailAuxRemoval:
      if (subset_of(input, C::SCWS)) return C::SCWS;
      if (subset_of(input, C::RCWS)) return C::RCWS;
      return std::nullopt;
    case PassId::T6ResetFinalize:
      if (subset_of(input, C::SCWS)) return C::SCNW;
      if (subset_of(input, C::RCWS)) return C::RCNW;
      return std::nullopt;
  }
  return std::nullopt;
}

PipelineResult run_pipeline(const Circuit& c, const Permutation& p,
                            std::span<const PassId> passes, ClassId input_class,
                            const Tolerances& tol) {
  PipelineResult result;
  result.circuit = c;
  result.guaranteed = input_class;
  for (std::size_t s = 0; s < passes.size(); ++s) {
    const PassId pass = passes[s];
    const auto next_class = guaranteed_class(pass, result.guaranteed);
    if (!next_class)
      throw PipelineError(s, std::string(pass_name(pass)) +
                                 " does not apply to class " +
                                 std::string(class_name(result.guaranteed)));
    PipelineStage stage;
    stage.pass = pass;
    stage.counts_before = resource_counts(result.circuit);

    PassOutcome outcome;
    switch (pass) {
      case PassId::T1BoundaryRelative:
        outcome = t1_boundary_relative(result.circuit);
        break;
      case PassId::T2ConjugationRelative:
        outcome = t2_conjugation_relative(result.circuit);
        break;
      case PassId::T3WastingElision:
        outcome = t3_wasting_elision(result.circuit);
        break;
      case PassId::T4CleanControlSimplify:
        outcome = t4_clean_control_simplify(
            result.circuit, subset_of(result.guaranteed, ClassId::RCNW));
        break;
      case PassId::T5TailAuxRemoval:
        outcome = t5_tail_aux_removal(result.circuit);
        break;
      case PassId::T6ResetFinalize:
        outcome = t6_reset_finalize(result.circuit);
        break;
    }
    result.circuit = std::move(outcome.circuit);
    result.guaranteed = *next_class;
    stage.guaranteed = *next_class;
    stage.counts_after = resource_counts(result.circuit);
    stage.removed = std::move(outcome.removed);
    stage.substituted = std::move(outcome.substituted);
    stage.diagnostics = std::move(outcome.diagnostics);
    result.stages.push_back(std::move(stage));
  }
  result.report = classify_circuit(result.circuit, p, tol);
  return result;
}

}  // namespace permclass
