// Copyright 2026 The qetkit authors
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

#include "qetkit/block_encoding.hpp"

#include <algorithm>
#include <cmath>

namespace qetkit {

void CostLedger::add_counts(const CostLedger& other) {
  for (const auto& [name, count] : other.instances) instances[name] += count;
}

void CostLedger::set_all_counts(long long value) {
  for (auto& [name, count] : instances) count = value;
}

long long CostLedger::total() const {
  long long t = 0;
  for (const auto& [name, count] : instances) t += count;
  return t;
}

void BlockEncoding::validate(const Tolerances& tol) const {
  if (alpha <= 0.0)
    throw PreconditionError("InvalidBlockEncoding",
                            "block encoding: alpha must be positive");
  if (epsilon < 0.0)
    throw PreconditionError("InvalidBlockEncoding",
                            "block encoding: epsilon must be nonnegative");
  if (ancillas < 0 || system_qubits < 0)
    throw PreconditionError("InvalidBlockEncoding",
                            "block encoding: negative register size");
  if (unitary.rows() != unitary.cols() || unitary.rows() != dim())
    throw PreconditionError("InvalidBlockEncoding",
                            "block encoding: unitary dim is not 2^(a+n)");
  if (unitarity_defect(unitary) > tol.unitarity)
    throw PreconditionError("InvalidBlockEncoding",
                            "block encoding: unitarity check failed");
}

ComplexMatrix extract_block(const BlockEncoding& be) {
  const long long n = be.system_dim();
  return be.alpha * be.unitary.topLeftCorner(n, n);
}

double verify_be(const BlockEncoding& be, const ComplexMatrix& target) {
  if (target.rows() != be.system_dim() || target.cols() != be.system_dim())
    throw std::invalid_argument("verify_be: target dimension mismatch");
  return operator_norm(ComplexMatrix(target - extract_block(be)));
}

namespace {

// Principal square root of a (numerically) positive semidefinite Hermitian
// matrix; slightly negative eigenvalues from rounding are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  Eigen::VectorXd vals = solver.eigenvalues();
  for (long i = 0; i < vals.size(); ++i)
    vals(i) = vals(i) > 0.0 ? std::sqrt(vals(i)) : 0.0;
  return solver.eigenvectors() * vals.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace

BlockEncoding dilate(const ComplexMatrix& a, double alpha,
                     const std::string& oracle_name, const Tolerances& tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("dilate: matrix must be square");
  if (alpha <= 0.0) throw std::invalid_argument("dilate: alpha must be positive");
  const long long n = a.rows();
  if (!is_power_of_two(n))
    throw std::invalid_argument("dilate: dimension must be a power of two");

  ComplexMatrix t = a / alpha;
  if (operator_norm(t) > 1.0 + tol.dilation_norm_slack)
    throw PreconditionError("NormTooLarge",
                            "dilate: ||A/alpha|| exceeds 1");

  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = t;
  u.topRightCorner(n, n) = psd_sqrt(id - t * t.adjoint());
  u.bottomLeftCorner(n, n) = psd_sqrt(id - t.adjoint() * t);
  u.bottomRightCorner(n, n) = -t.adjoint();

  BlockEncoding be;
  be.unitary = std::move(u);
  be.alpha = alpha;
  be.ancillas = 1;
  be.epsilon = 0.0;
  be.system_qubits = log2_exact(n);
  be.ledger.instances[oracle_name] = 1;
  be.ledger.ancilla_high_water = 1;
  return be;
}

BlockEncoding adjoint(const BlockEncoding& be) {
  BlockEncoding out = be;
  out.unitary = be.unitary.adjoint();
  return out;
}

BlockEncoding product(const BlockEncoding& a, const BlockEncoding& b) {
  if (a.system_qubits != b.system_qubits)
    throw std::invalid_argument("product: system dimension mismatch");
  const long long n = a.system_dim();
  const long long da = 1LL << a.ancillas;
  const long long db = 1LL << b.ancillas;

  // Each factor keeps its own ancilla register and shares the system
  // register; the combined matrix contracts only over the system index:
  //   W[(xa', xb'), (xa, xb)] = UA[xa', xa] * UB[xb', xb]  (N x N blocks).
  ComplexMatrix w(da * db * n, da * db * n);
  for (long long xa_out = 0; xa_out < da; ++xa_out)
    for (long long xa_in = 0; xa_in < da; ++xa_in) {
      const auto block_a = a.unitary.block(xa_out * n, xa_in * n, n, n);
      for (long long xb_out = 0; xb_out < db; ++xb_out)
        for (long long xb_in = 0; xb_in < db; ++xb_in) {
          w.block((xa_out * db + xb_out) * n, (xa_in * db + xb_in) * n, n, n) =
              block_a * b.unitary.block(xb_out * n, xb_in * n, n, n);
        }
    }

  BlockEncoding out;
  out.unitary = std::move(w);
  out.alpha = a.alpha * b.alpha;
  out.ancillas = a.ancillas + b.ancillas;
  out.epsilon = a.alpha * b.epsilon + b.alpha * a.epsilon;
  out.system_qubits = a.system_qubits;
  out.ledger = a.ledger;
  out.ledger.add_counts(b.ledger);
  out.ledger.ancilla_high_water =
      a.ledger.ancilla_high_water + b.ledger.ancilla_high_water;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix prepare_oracle_unitary(const std::vector<double>& amplitudes) {
  const long k = static_cast<long>(amplitudes.size());
  Eigen::VectorXd v(k);
  for (long i = 0; i < k; ++i) {
    if (amplitudes[static_cast<std::size_t>(i)] < 0.0)
      throw std::invalid_argument("prepare_oracle_unitary: negative amplitude");
    v(i) = amplitudes[static_cast<std::size_t>(i)];
  }
  const double norm = v.norm();
  if (norm <= 0.0)
    throw std::invalid_argument("prepare_oracle_unitary: zero amplitude vector");
  v /= norm;

  // Householder reflection mapping e_0 to v; for v ~ e_0 the identity works.
  Eigen::VectorXd u = v;
  u(0) -= 1.0;
  const double uu = u.squaredNorm();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(k, k);
  if (uu > 1e-30) h -= (2.0 / uu) * (u * u.transpose());
  return h.cast<Complex>();
}

BlockEncoding lcu(const std::vector<BlockEncoding>& terms,
                  const std::vector<Complex>& coefficients,
                  const Tolerances& tol) {
  if (terms.empty() || terms.size() != coefficients.size())
    throw std::invalid_argument("lcu: need matching nonempty term and "
                                "coefficient lists");
  const int n = terms.front().system_qubits;
  for (const auto& t : terms)
    if (t.system_qubits != n)
      throw std::invalid_argument("lcu: system dimension mismatch");

  // Zero-coefficient terms are dropped up front and charged nothing.
  std::vector<const BlockEncoding*> kept;
  std::vector<Complex> weights;  // c_j * alpha_j
  double lambda = 0.0;           // sum |c_j alpha_j|
  double eps = 0.0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (coefficients[j] == Complex(0.0, 0.0)) continue;
    kept.push_back(&terms[j]);
    weights.push_back(coefficients[j] * terms[j].alpha);
    lambda += std::abs(weights.back());
    eps += std::abs(coefficients[j]) * terms[j].epsilon;
  }
  if (kept.empty())
    throw std::invalid_argument("lcu: all coefficients are zero");

  int a_max = 0;
  for (const auto* t : kept) a_max = std::max(a_max, t->ancillas);

  // Pad the term list to a power of two (at least one select qubit).
  int select_qubits = 1;
  while ((1 << select_qubits) < static_cast<int>(kept.size())) ++select_qubits;
  const int k_padded = 1 << select_qubits;

  const long long nd = 1LL << n;
  const long long term_dim = (1LL << a_max) * nd;

  // Prepare oracle from the weight magnitudes (phases go to select).
  std::vector<double> amps(static_cast<std::size_t>(k_padded), 0.0);
  for (std::size_t j = 0; j < weights.size(); ++j)
    amps[j] = std::sqrt(std::abs(weights[j]) / lambda);
  ComplexMatrix v = prepare_oracle_unitary(amps);

  // W = (V' x I) Select (V x I) = sum_j (V' e_j)(V' e_j)' x (phase_j U_j),
  // assembled blockwise to exploit the select oracle's block-diagonal
  // structure.
  ComplexMatrix w = ComplexMatrix::Zero(k_padded * term_dim, k_padded * term_dim);
  for (int j = 0; j < k_padded; ++j) {
    ComplexMatrix u_j;
    Complex phase(1.0, 0.0);
    if (j < static_cast<int>(kept.size())) {
      const BlockEncoding& t = *kept[static_cast<std::size_t>(j)];
      const int pad = a_max - t.ancillas;
      u_j = pad == 0
                ? t.unitary
                : kron(ComplexMatrix::Identity(1LL << pad, 1LL << pad), t.unitary);
      const double mag = std::abs(weights[static_cast<std::size_t>(j)]);
      if (mag > 0.0) phase = weights[static_cast<std::size_t>(j)] / mag;
    } else {
      u_j = ComplexMatrix::Identity(term_dim, term_dim);
    }
    u_j *= phase;
    const StateVector wj = v.row(j).conjugate().transpose();  // V' e_j
    for (int jp = 0; jp < k_padded; ++jp) {
      for (int jq = 0; jq < k_padded; ++jq) {
        const Complex scale = wj(jp) * std::conj(wj(jq));
        if (scale == Complex(0.0, 0.0)) continue;
        w.block(jp * term_dim, jq * term_dim, term_dim, term_dim) += scale * u_j;
      }
    }
  }

  BlockEncoding out;
  out.unitary = std::move(w);
  out.alpha = lambda;
  out.ancillas = a_max + select_qubits;
  out.epsilon = eps;
  out.system_qubits = n;
  int hw = 0;
  for (const auto* t : kept) {
    out.ledger.add_counts(t->ledger);
    hw = std::max(hw, t->ledger.ancilla_high_water);
  }
  out.ledger.ancilla_high_water = hw + select_qubits;
  (void)tol;
  return out;
}

Postselection apply_and_postselect(const BlockEncoding& be,
                                   const StateVector& v,
                                   const Tolerances& tol) {
  if (v.size() != be.system_dim())
    throw std::invalid_argument("apply_and_postselect: state dimension "
                                "mismatch");
  StateVector full = StateVector::Zero(be.dim());
  full.head(v.size()) = v;
  full = be.unitary * full;
  return postselect_zero_ancilla(full, be.ancillas, tol);
}

}  // namespace qetkit
