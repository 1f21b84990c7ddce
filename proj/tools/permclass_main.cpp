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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permclass/classifier.hpp"
#include "permclass/io.hpp"
#include "permclass/mct_zoo.hpp"
#include "permclass/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace permclass;

constexpr int kExitOk = 0;
constexpr int kExitExpectFailed = 1;
constexpr int kExitUsage = 2;

Circuit read_circuit(const std::string& path) {
  if (path == "-") return parse_circuit(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_circuit(in);
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
}

Permutation parse_perm_spec(const std::string& spec) {
  if (spec.rfind("mct:", 0) == 0)
    return mct_permutation(static_cast<std::uint32_t>(std::stoul(spec.substr(4))));
  if (spec.rfind("identity:", 0) == 0)
    return identity_permutation(static_cast<std::uint32_t>(std::stoul(spec.substr(9))));
  const json arr = json::parse(spec);
  if (!arr.is_array())
    throw Error("permutation spec must be mct:<n>, identity:<n> or a JSON array");
  std::vector<std::size_t> map;
  for (const auto& v : arr) map.push_back(v.get<std::size_t>());
  return Permutation(std::move(map));
}

std::string unitary_csv(const Matrix& u) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      if (j) out << ',';
      out << u(i, j).real() << ',' << u(i, j).imag();
    }
    out << '\n';
  }
  return out.str();
}

json report_to_json(const VerificationReport& report, const Tolerances& tol) {
  json out;
  out["atol"] = tol.atol;
  out["rank1_tol"] = tol.rank1_tol;
  out["unitarity_deviation"] = report.unitarity_deviation;
  json classes = json::object();
  for (ClassId id : all_classes()) {
    const ClassVerdict& v = report.per_class.at(id);
    json entry;
    entry["member"] = v.member;
    entry["deviation"] = v.deviation;
    if (v.witness) {
      entry["witness_b"] = v.witness->first;
      entry["witness_c"] = v.witness->second;
    }
    classes[std::string(class_name(id))] = entry;
  }
  out["classes"] = classes;
  json minimal = json::array();
  for (ClassId id : report.minimal) minimal.push_back(std::string(class_name(id)));
  out["minimal"] = minimal;
  out["diagnostics"] = report.diagnostics;
  return out;
}

json counts_to_json(const ResourceCounts& rc) {
  json out;
  json per_kind = json::object();
  for (const auto& [kind, count] : rc.per_kind) per_kind[gate_name(kind)] = count;
  out["gates"] = per_kind;
  out["total"] = rc.total_gates();
  out["cnot_count"] = rc.cnot_count;
  out["t_count"] = rc.t_count;
  out["depth"] = rc.depth;
  out["aux_count"] = rc.aux_count;
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

int cmd_classify(const std::string& in, const std::string& perm_spec,
                 const Tolerances& tol, const std::string& expect,
                 const std::string& dump_unitary) {
  const Circuit c = read_circuit(in);
  const Permutation p = parse_perm_spec(perm_spec);
  if (!dump_unitary.empty()) write_file(dump_unitary, unitary_csv(unitary_of(c)));
  const VerificationReport report = classify_circuit(c, p, tol);
  std::cout << report_to_json(report, tol).dump(2) << "\n";
  if (!expect.empty()) {
    const auto id = class_from_name(expect);
    if (!id) throw Error("unknown class '" + expect + "'");
    if (!report.member(*id)) return kExitExpectFailed;
  }
  return kExitOk;
}

int cmd_synth(const std::string& kind, std::uint32_t controls,
              const std::string& out_path) {
  Circuit c;
  if (kind == "toffoli6") c = toffoli_strict();
  else if (kind == "margolus") c = relative_toffoli();
  else if (kind == "rccx") c = rccx();
  else if (kind == "rc3x") c = rc3x();
  else if (kind == "barenco") c = barenco_ladder(controls);
  else if (kind == "vchain-clean") c = vchain(controls, false);
  else if (kind == "vchain-dirty") c = vchain(controls, true);
  else if (kind == "cwe") c = cwe_mct(controls);
  else if (kind == "dwe") c = dwe_mct(controls);
  else throw Error("unknown synth kind '" + kind + "'");
  write_file(out_path, print_circuit(c));
  return kExitOk;
}

int cmd_stats(const std::string& in, bool expanded) {
  Circuit c = read_circuit(in);
  if (expanded) c = expand_to_clifford_t(c);
  std::cout << counts_to_json(resource_counts(c)).dump(2) << "\n";
  return kExitOk;
}

int cmd_factor(const std::string& in, std::uint32_t nv_qubits, const Tolerances& tol) {
  const Circuit c = read_circuit(in);
  if (nv_qubits == 0 || nv_qubits >= c.partition.total())
    throw Error("--nv-qubits must split the register into two non-empty parts");
  const Matrix u = unitary_of(c);
  const Eigen::Index nv = Eigen::Index{1} << nv_qubits;
  const Eigen::Index nw = u.rows() / nv;
  const FactorOutcome outcome = factor_unitary(u, nv, nw, tol.atol, tol.rank1_tol);
  json out;
  out["atol"] = tol.atol;
  out["rank1_tol"] = tol.rank1_tol;
  out["separable"] = outcome.separable();
  out["sigma_ratio"] = outcome.sigma_ratio;
  if (outcome.separable()) {
    out["residual"] = outcome.factors->residual;
    out["v"] = matrix_to_json(outcome.factors->v);
    out["w"] = matrix_to_json(outcome.factors->w);
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_transform(const std::string& in, const std::string& passes_csv,
                  const std::string& input_class, const std::string& perm_spec,
                  const std::string& out_path, const std::string& report_path,
                  const Tolerances& tol) {
  const Circuit c = read_circuit(in);
  const Permutation p = parse_perm_spec(perm_spec);
  const auto declared = class_from_name(input_class);
  if (!declared) throw Error("unknown class '" + input_class + "'");

  std::vector<PassId> passes;
  std::stringstream ss(passes_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto pass = pass_from_name(name);
    if (!pass) throw Error("unknown pass '" + name + "'");
    passes.push_back(*pass);
  }

  const PipelineResult result = run_pipeline(c, p, passes, *declared, tol);
  if (!out_path.empty() && out_path != "-")
    write_file(out_path, print_circuit(result.circuit));

  json out;
  out["input_class"] = std::string(class_name(*declared));
  out["guaranteed_class"] = std::string(class_name(result.guaranteed));
  json stages = json::array();
  for (const PipelineStage& stage : result.stages) {
    json s;
    s["pass"] = std::string(pass_name(stage.pass));
    s["guaranteed"] = std::string(class_name(stage.guaranteed));
    s["counts_before"] = counts_to_json(stage.counts_before);
    s["counts_after"] = counts_to_json(stage.counts_after);
    json removed = json::array();
    for (const auto& [b, e] : stage.removed) removed.push_back(json::array({b, e}));
    s["removed"] = removed;
    s["substituted"] = stage.substituted;
    s["diagnostics"] = stage.diagnostics;
    stages.push_back(s);
  }
  out["stages"] = stages;
  out["report"] = report_to_json(result.report, tol);
  const std::string text = out.dump(2) + "\n";
  if (!report_path.empty()) write_file(report_path, text);
  else std::cout << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification and transformation toolkit for permutation circuits"};
  app.require_subcommand(1);

  Tolerances tol;
  std::string in = "-";
  std::string perm_spec;
  std::string expect;
  std::string dump_unitary;
  std::string kind;
  std::uint32_t controls = 0;
  std::string out_path = "-";
  std::string passes_csv;
  std::string input_class;
  std::string report_path;
  bool expanded = false;
  std::uint32_t nv_qubits = 0;

  auto* classify = app.add_subcommand("classify", "report class memberships");
  classify->add_option("--in", in, "circuit file ('-' for stdin)");
  classify
      ->add_option("--perm", perm_spec,
                   "target permutation: mct:<controls>, identity:<qubits>, or a "
                   "JSON array")
      ->required();
  classify->add_option("--atol", tol.atol, "max-entry equality tolerance");
  classify->add_option("--rank1-tol", tol.rank1_tol, "singular-value gap tolerance");
  classify->add_option("--expect", expect, "exit 1 unless a member of this class");
  classify->add_option("--dump-unitary", dump_unitary, "write the unitary as re,im CSV");

  auto* synth = app.add_subcommand("synth", "emit a reference MCT decomposition");
  synth
      ->add_option("--kind", kind,
                   "toffoli6|margolus|rccx|rc3x|barenco|vchain-clean|vchain-dirty|"
                   "cwe|dwe")
      ->required();
  synth->add_option("--controls", controls, "number of controls");
  synth->add_option("--out", out_path, "output file ('-' for stdout)");

  auto* stats = app.add_subcommand("stats", "resource counts of a circuit");
  stats->add_option("--in", in, "circuit file ('-' for stdin)");
  stats->add_flag("--expanded", expanded, "expand composite gates first");

  auto* factor = app.add_subcommand("factor", "Kronecker factorization of the unitary");
  factor->add_option("--in", in, "circuit file ('-' for stdin)");
  factor->add_option("--nv-qubits", nv_qubits, "qubits in the leading factor")
      ->required();
  factor->add_option("--atol", tol.atol, "max-entry equality tolerance");
  factor->add_option("--rank1-tol", tol.rank1_tol, "singular-value gap tolerance");

  auto* transform = app.add_subcommand("transform", "run class-preserving passes");
  transform->add_option("--in", in, "circuit file ('-' for stdin)");
  transform->add_option("--passes", passes_csv, "comma-separated list, e.g. t4,t3,t1")
      ->required();
  transform->add_option("--input-class", input_class, "declared class of the input")
      ->required();
  transform->add_option("--perm", perm_spec, "target permutation for the final report")
      ->required();
  transform->add_option("--out", out_path, "transformed circuit file");
  transform->add_option("--report", report_path, "JSON report file (default stdout)");
  transform->add_option("--atol", tol.atol, "max-entry equality tolerance");
  transform->add_option("--rank1-tol", tol.rank1_tol, "singular-value gap tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed())
      return cmd_classify(in, perm_spec, tol, expect, dump_unitary);
    if (synth->parsed()) return cmd_synth(kind, controls, out_path);
    if (stats->parsed()) return cmd_stats(in, expanded);
    if (factor->parsed()) return cmd_factor(in, nv_qubits, tol);
    if (transform->parsed())
      return cmd_transform(in, passes_csv, input_class, perm_spec, out_path,
                           report_path, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
