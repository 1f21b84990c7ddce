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

#include "permclass/classifier.hpp"

#include <cmath>
#include <set>

namespace permclass {

namespace {

ClassVerdict verdict_from_deviation(double dev, double atol) {
  ClassVerdict v;
  v.member = dev < atol;
  v.deviation = dev;
  return v;
}

// <A> = I test: deviation of strip_global_phase(a) from the identity.
ClassVerdict phase_stripped_identity(const Matrix& a, double atol) {
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  return verdict_from_deviation(max_abs_diff(strip_global_phase(a), id), atol);
}

ClassVerdict identity_check(const Matrix& a, double atol) {
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  return verdict_from_deviation(max_abs_diff(a, id), atol);
}

// Squared-norm equality avoids square-root noise near 1.
double norm_defect(const Vector& psi) { return std::abs(psi.squaredNorm() - 1.0); }

ClassVerdict witness_norm_check(const Matrix& u, const Permutation& p,
                                Eigen::Index aux_dim, bool all_aux_inputs,
                                double atol) {
  const Eigen::Index n = static_cast<Eigen::Index>(p.size());
  const Eigen::Index c_limit = all_aux_inputs ? aux_dim : 1;
  ClassVerdict v;
  v.member = true;
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index c = 0; c < c_limit; ++c) {
      const double defect = norm_defect(witness_state(u, p, b, c, aux_dim));
      if (defect > v.deviation) {
        v.deviation = defect;
        if (defect >= atol) v.witness = {b, c};
      }
    }
  }
  v.member = v.deviation < atol;
  if (v.member) v.witness.reset();
  return v;
}

// S-C-WS: <phi_b | phi_0> = 1 for all b, with phi_0 explicitly normalized.
ClassVerdict separable_waste_check(const Matrix& u, const Permutation& p,
                                   Eigen::Index aux_dim, double atol) {
  const Eigen::Index n = static_cast<Eigen::Index>(p.size());
  const Vector phi0 = witness_state(u, p, 0, 0, aux_dim);
  ClassVerdict v;
  v.deviation = norm_defect(phi0);
  if (v.deviation >= atol) v.witness = {0, 0};
  for (Eigen::Index b = 0; b < n; ++b) {
    const Vector phi = witness_state(u, p, b, 0, aux_dim);
    const double defect = std::abs(phi0.dot(phi) - Complex{1.0, 0.0});
    if (defect > v.deviation) {
      v.deviation = defect;
      v.witness = {b, 0};
    }
  }
  v.member = v.deviation < atol;
  if (v.member) v.witness.reset();
  return v;
}

// R-C-WS: |(I (x) <psi|) U (I (x) |0>)| = U_pi with psi the (0,0) witness.
ClassVerdict relative_separable_waste_check(const Matrix& u, const Permutation& p,
                                            Eigen::Index aux_dim, double atol) {
  const Eigen::Index n = static_cast<Eigen::Index>(p.size());
  const Vector psi = witness_state(u, p, 0, 0, aux_dim);
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index c = 0; c < aux_dim; ++c)
        acc += std::conj(psi(c)) * u(i * aux_dim + c, j * aux_dim);
      m(i, j) = acc;
    }
  return verdict_from_deviation(
      max_abs_diff(elementwise_abs(m), permutation_matrix(p)), atol);
}

struct CheckContext {
  const Matrix& u;
  const Permutation& p;
  Eigen::Index aux_dim;
  Tolerances tol;
  // Factorization shared by the product-form checks; computed on demand.
  mutable std::optional<FactorOutcome> factor;

  const FactorOutcome& factorization() const {
    if (!factor)
      factor = factor_unitary_prevalidated(u, static_cast<Eigen::Index>(p.size()),
                                           aux_dim, tol.atol, tol.rank1_tol);
    return *factor;
  }
};

ClassVerdict check_class(ClassId label, const CheckContext& ctx) {
  const Matrix& u = ctx.u;
  const Permutation& p = ctx.p;
  const Eigen::Index aux_dim = ctx.aux_dim;
  const double atol = ctx.tol.atol;
  const Matrix u_pi_dag = permutation_matrix(p).adjoint();

  // One-dimensional auxiliary: clean/dirty and waste distinctions collapse to
  // the direct strict/relative tests on U itself.
  if (aux_dim == 1) {
    if (is_strict(label)) return phase_stripped_identity(u * u_pi_dag, atol);
    return identity_check(elementwise_abs(u) * u_pi_dag, atol);
  }

  switch (label) {
    case ClassId::SCNW:
      return phase_stripped_identity(project_clean(u, aux_dim) * u_pi_dag, atol);
    case ClassId::RCNW:
      return identity_check(elementwise_abs(project_clean(u, aux_dim)) * u_pi_dag,
                            atol);
    case ClassId::SDNW: {
      const Eigen::Index n = static_cast<Eigen::Index>(p.size());
      // U (U_pi^dag (x) I): column block j of the product is block pi^-1(j)
      // of U, i.e. block j of U lands at pi(j).
      Matrix m(u.rows(), u.cols());
      for (Eigen::Index j = 0; j < n; ++j)
        m.middleCols(static_cast<Eigen::Index>(p(static_cast<std::size_t>(j))) * aux_dim,
                     aux_dim) = u.middleCols(j * aux_dim, aux_dim);
      return phase_stripped_identity(m, atol);
    }
    case ClassId::RDNW: {
      const FactorOutcome& f = ctx.factorization();
      if (!f.separable()) {
        ClassVerdict v;
        v.deviation = f.sigma_ratio;
        return v;
      }
      const double dev_v =
          max_abs_diff(elementwise_abs(f.factors->v) * u_pi_dag,
                       Matrix::Identity(u_pi_dag.rows(), u_pi_dag.cols()));
      const double dev_w = max_abs_diff(strip_global_phase(f.factors->w),
                                        Matrix::Identity(aux_dim, aux_dim));
      return verdict_from_deviation(std::max(dev_v, dev_w), atol);
    }
    case ClassId::CWE:
      return witness_norm_check(u, p, aux_dim, /*all_aux_inputs=*/false, atol);
    case ClassId::DWE:
      return witness_norm_check(u, p, aux_dim, /*all_aux_inputs=*/true, atol);
    case ClassId::SCWS:
      return separable_waste_check(u, p, aux_dim, atol);
    case ClassId::RCWS:
      return relative_separable_waste_check(u, p, aux_dim, atol);
    case ClassId::SDWS: {
      const FactorOutcome& f = ctx.factorization();
      if (!f.separable()) {
        ClassVerdict v;
        v.deviation = f.sigma_ratio;
        return v;
      }
      return phase_stripped_identity(f.factors->v * u_pi_dag, atol);
    }
    case ClassId::RDWS: {
      const FactorOutcome& f = ctx.factorization();
      if (!f.separable()) {
        ClassVerdict v;
        v.deviation = f.sigma_ratio;
        return v;
      }
      return identity_check(elementwise_abs(f.factors->v) * u_pi_dag, atol);
    }
    default:
      break;
  }
  throw Error("unhandled class label");
}

// Returns the unitarity deviation; the U U^dag product dominates at large
// dimensions, so callers compute it once.
double check_dimensions(const Matrix& u, const Permutation& p,
                        Eigen::Index aux_dim, double atol) {
  if (aux_dim < 1 ||
      u.rows() != static_cast<Eigen::Index>(p.size()) * aux_dim ||
      u.rows() != u.cols())
    throw DimensionMismatch("unitary dimension must equal N * aux_dim");
  const double dev = unitarity_deviation(u);
  if (dev >= atol) throw NotUnitary("matrix under test is not unitary");
  return dev;
}

}  // namespace

ClassVerdict verify(ClassId label, const Matrix& u, const Permutation& p,
                    Eigen::Index aux_dim, const Tolerances& tol) {
  check_dimensions(u, p, aux_dim, tol.atol);
  CheckContext ctx{u, p, aux_dim, tol, std::nullopt};
  return check_class(label, ctx);
}

VerificationReport classify_all(const Matrix& u, const Permutation& p,
                                Eigen::Index aux_dim, const Tolerances& tol) {
  const double dev = check_dimensions(u, p, aux_dim, tol.atol);
  CheckContext ctx{u, p, aux_dim, tol, std::nullopt};
  VerificationReport report;
  report.unitarity_deviation = dev;
  std::set<ClassId> members;
  for (ClassId id : all_classes()) {
    report.per_class[id] = check_class(id, ctx);
    if (report.per_class[id].member) members.insert(id);
  }
  report.minimal = minimal_classes(members);
  return report;
}

VerificationReport classify_circuit(const Circuit& c, const Permutation& p,
                                    const Tolerances& tol) {
  const std::size_t n_main = std::size_t{1} << c.partition.num_main;
  if (n_main != p.size())
    throw DimensionMismatch("main register does not match permutation size");
  const Eigen::Index aux_dim = Eigen::Index{1} << c.partition.num_aux;

  const std::size_t suffix = c.reset_suffix_begin();
  if (suffix == c.gates.size())
    return classify_all(unitary_of(c), p, aux_dim, tol);

  // Trailing RESET suffix: verify the reset-free prefix, then report the
  // upgrade a full auxiliary reset grants.
  Circuit prefix;
  prefix.partition = c.partition;
  prefix.gates.assign(c.gates.begin(), c.gates.begin() + static_cast<std::ptrdiff_t>(suffix));
  std::set<std::uint32_t> reset_qubits;
  for (std::size_t i = suffix; i < c.gates.size(); ++i)
    reset_qubits.insert(c.gates[i].qubits[0]);

  const VerificationReport prefix_report = classify_all(unitary_of(prefix), p, aux_dim, tol);

  VerificationReport report;
  report.unitarity_deviation = prefix_report.unitarity_deviation;
  for (ClassId id : all_classes()) report.per_class[id] = ClassVerdict{};

  if (reset_qubits.size() != c.partition.num_aux) {
    report.diagnostics.push_back(
        "reset suffix does not cover all auxiliary qubits; no class upgrade");
    return report;
  }

  std::set<ClassId> members;
  if (prefix_report.member(ClassId::SCWS)) members.insert(ClassId::SCNW);
  if (prefix_report.member(ClassId::RCWS)) members.insert(ClassId::RCNW);
  if (members.empty()) {
    report.diagnostics.push_back(
        "NonSeparableWaste: prefix is not clean wasting-separable; resets do "
        "not yield a non-wasting implementation");
  }
  // The member set is the upward closure of what the reset rule grants.
  std::set<ClassId> closed;
  for (ClassId m : members)
    for (ClassId id : all_classes())
      if (subset_of(m, id)) closed.insert(id);
  for (ClassId id : closed) {
    report.per_class[id].member = true;
    const ClassId source =
        prefix_report.member(ClassId::SCWS) ? ClassId::SCWS : ClassId::RCWS;
    report.per_class[id].deviation = prefix_report.per_class.at(source).deviation;
  }
  report.minimal = minimal_classes(closed);
  return report;
}

}  // namespace permclass
