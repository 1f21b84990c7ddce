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

#include "permclass/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace permclass {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

std::size_t parse_number(const std::string& tok, std::size_t line_no,
                         const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

std::size_t parse_keyed_number(const std::string& tok, const std::string& key,
                               std::size_t line_no) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError(line_no, "expected '" + key + "=<n>', got '" + tok + "'");
  return parse_number(tok.substr(key.size() + 1), line_no, "a number");
}

std::optional<GateKind> fixed_kind_from_name(const std::string& name) {
  static const std::array<GateKind, 16> kinds = {
      GateKind::X,      GateKind::H,        GateKind::Z,
      GateKind::S,      GateKind::Sdg,      GateKind::T,
      GateKind::Tdg,    GateKind::CX,       GateKind::CZ,
      GateKind::CCX,    GateKind::Rccx,     GateKind::RccxDg,
      GateKind::Rc3x,   GateKind::Rc3xDg,   GateKind::Margolus,
      GateKind::MargolusDg};
  for (GateKind k : kinds)
    if (gate_name(k) == name) return k;
  if (name == "reset") return GateKind::Reset;
  return std::nullopt;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool header_seen = false;
  bool gates_done = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!header_seen) {
      if (tokens[0] != "qubits" || tokens.size() != 3)
        throw ParseError(line_no, "expected header 'qubits main=<m> aux=<a>'");
      c.partition.num_main =
          static_cast<std::uint32_t>(parse_keyed_number(tokens[1], "main", line_no));
      c.partition.num_aux =
          static_cast<std::uint32_t>(parse_keyed_number(tokens[2], "aux", line_no));
      header_seen = true;
      continue;
    }

    if (tokens[0] == "block") {
      if (tokens.size() != 4)
        throw ParseError(line_no, "expected 'block <start> <end> <tag>'");
      BlockAnnotation blk;
      blk.begin = parse_number(tokens[1], line_no, "block start");
      blk.end = parse_number(tokens[2], line_no, "block end");
      blk.tag = tokens[3];
      c.blocks.push_back(blk);
      gates_done = true;
      continue;
    }
    if (gates_done)
      throw ParseError(line_no, "gate lines may not follow block lines");

    Gate g;
    if (tokens[0].rfind("mcx", 0) == 0 && tokens[0] != "mcx") {
      const std::size_t k = parse_number(tokens[0].substr(3), line_no, "control count");
      if (k < 3)
        throw ParseError(line_no, "mcx needs at least 3 controls; use cx/ccx below that");
      g.kind = GateKind::Mcx;
      if (tokens.size() != k + 2)
        throw ParseError(line_no, "mcx" + std::to_string(k) + " expects " +
                                      std::to_string(k + 1) + " qubits");
    } else {
      const auto kind = fixed_kind_from_name(tokens[0]);
      if (!kind) throw ParseError(line_no, "unknown gate '" + tokens[0] + "'");
      g.kind = *kind;
      if (tokens.size() != gate_arity(*kind) + 1)
        throw ParseError(line_no, "gate " + tokens[0] + " expects " +
                                      std::to_string(gate_arity(*kind)) + " qubits");
    }
    for (std::size_t i = 1; i < tokens.size(); ++i)
      g.qubits.push_back(
          static_cast<std::uint32_t>(parse_number(tokens[i], line_no, "a qubit index")));
    c.gates.push_back(std::move(g));
  }

  if (!header_seen) throw ParseError(line_no, "missing 'qubits' header");
  try {
    validate_circuit(c);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  return c;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits main=" << c.partition.num_main << " aux=" << c.partition.num_aux
      << "\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind, g.qubits.size());
    for (std::uint32_t q : g.qubits) out << ' ' << q;
    out << "\n";
  }
  for (const BlockAnnotation& blk : c.blocks)
    out << "block " << blk.begin << ' ' << blk.end << ' ' << blk.tag << "\n";
  return out.str();
}

}  // namespace permclass
