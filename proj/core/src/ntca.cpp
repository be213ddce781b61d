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

#include "qetkit/ntca.hpp"

#include <cmath>

namespace qetkit {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

ComplexMatrix phase_s() {
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(1, 1) = kI;
  return s;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  return z;
}

ComplexMatrix identity(long long dim) {
  return ComplexMatrix::Identity(dim, dim);
}

// Rearranges tensor factors: qubit j of the input becomes qubit
// new_pos[j] of the output (position 0 = most significant).
ComplexMatrix permute_qubits(const ComplexMatrix& m,
                             const std::vector<int>& new_pos) {
  const int q = log2_exact(m.rows());
  const long long dim = m.rows();
  std::vector<long long> map(static_cast<std::size_t>(dim));
  for (long long x = 0; x < dim; ++x) {
    long long y = 0;
    for (int j = 0; j < q; ++j) {
      const long long bit = (x >> (q - 1 - j)) & 1;
      y |= bit << (q - 1 - new_pos[static_cast<std::size_t>(j)]);
    }
    map[static_cast<std::size_t>(x)] = y;
  }
  ComplexMatrix out(dim, dim);
  for (long long col = 0; col < dim; ++col)
    for (long long row = 0; row < dim; ++row)
      out(map[static_cast<std::size_t>(row)], map[static_cast<std::size_t>(col)]) =
          m(row, col);
  return out;
}

}  // namespace

int PrepareOracle::qubits() const { return log2_exact(unitary.rows()); }

void PrepareOracle::validate(const Tolerances& tol) const {
  if (unitary.rows() != unitary.cols() || !is_power_of_two(unitary.rows()))
    throw PreconditionError("InvalidPrepareOracle",
                            "prepare oracle: dimension must be a power of two");
  if (!is_unitary(unitary, tol.unitarity))
    throw PreconditionError("InvalidPrepareOracle",
                            "prepare oracle: unitarity check failed");
  if (std::abs(amplitudes().squaredNorm() - 1.0) > tol.state_norm)
    throw PreconditionError("InvalidPrepareOracle",
                            "prepare oracle: amplitudes are not normalized");
}

ComplexMatrix build_w(const PrepareOracle& u, WVariant variant) {
  const int n = u.qubits();
  const long long nd = 1LL << n;
  const long long dim = nd * nd * 2;  // |k> register, work register, flag

  const ComplexMatrix h_flag = kron(identity(nd * nd), hadamard());
  const ComplexMatrix u_work = kron(kron(identity(nd), u.unitary), identity(2));

  // Flag-controlled adjoint of U on the work register.
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const ComplexMatrix c_udag =
      kron(kron(identity(nd), identity(nd)), p0) +
      kron(kron(identity(nd), ComplexMatrix(u.unitary.adjoint())), p1);

  // Flag-controlled register compare: a CNOT fan from the |k> register onto
  //  the work register, i.e. (k, j, 1) -> (k, j xor k, 1).
  ComplexMatrix cx_fan = ComplexMatrix::Zero(dim, dim);
  for (long long k = 0; k < nd; ++k)
    for (long long j = 0; j < nd; ++j) {
      const long long base = (k * nd + j) * 2;
      cx_fan(base, base) = 1.0;                         // flag 0: identity
      cx_fan((k * nd + (j ^ k)) * 2 + 1, base + 1) = 1.0;  // flag 1: xor
    }

  ComplexMatrix w = cx_fan * c_udag * u_work * h_flag;
  if (variant == WVariant::Prime) w = kron(identity(nd * nd), phase_s()) * w;
  return h_flag * w;
}

ComplexMatrix build_g(const PrepareOracle& u, WVariant variant) {
  const int n = u.qubits();
  const long long nd = 1LL << n;

  const ComplexMatrix w = build_w(u, variant);
  const ComplexMatrix z_flag = kron(identity(nd * nd), pauli_z());

  // Reflection about |0^n>|0> on the bottom two registers. The sign is
  // fixed so the k-th sector of G carries the eigenvalue pair
  // -re(c_k) +- i sqrt(1 - re(c_k)^2).
  ComplexMatrix reflect = -ComplexMatrix::Identity(2 * nd, 2 * nd);
  reflect(0, 0) = 1.0;
  const ComplexMatrix s0 = kron(identity(nd), reflect);

  return w * s0 * w.adjoint() * z_flag;
}

BlockEncoding amplitude_be(const PrepareOracle& u, AmplitudePart part) {
  const int n = u.qubits();
  const long long nd = 1LL << n;
  const long long gdim = nd * nd * 2;

  const ComplexMatrix g =
      build_g(u, part == AmplitudePart::Real ? WVariant::Plain : WVariant::Prime);

  // Two-term combination (G + G')/2 on a fresh flag qubit, dressed with
  // H and X exactly as in the amplitude-encoding circuit.
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const ComplexMatrix h_q = kron(hadamard(), identity(gdim));
  const ComplexMatrix c0_g = kron(p0, g) + kron(p1, identity(gdim));
  const ComplexMatrix c1_gdag =
      kron(p0, identity(gdim)) + kron(p1, ComplexMatrix(g.adjoint()));
  const ComplexMatrix g_tilde = h_q * c1_gdag * c0_g * h_q;

  const ComplexMatrix w = build_w(
      u, part == AmplitudePart::Real ? WVariant::Plain : WVariant::Prime);
  const ComplexMatrix w_full = kron(identity(2), w);
  ComplexMatrix a_raw = w_full.adjoint() * g_tilde * w_full;

  // Register order so far: (q, |k>, work, flag). The encoding convention
  // wants ancillas (q, work, flag) on the most significant qubits and the
  // |k> register as the system, so rearrange and flip the global sign
  // (the sector eigenvalues of G are -re c_k; the sign makes the encoded
  // diagonal come out positive).
  std::vector<int> new_pos(static_cast<std::size_t>(2 * n + 2));
  new_pos[0] = 0;                                        // q stays on top
  for (int i = 0; i < n; ++i) new_pos[static_cast<std::size_t>(1 + i)] = n + 2 + i;  // |k|
  for (int i = 0; i < n; ++i) new_pos[static_cast<std::size_t>(n + 1 + i)] = 1 + i;  // work
  new_pos[static_cast<std::size_t>(2 * n + 1)] = n + 1;  // flag

  BlockEncoding be;
  be.unitary = -permute_qubits(a_raw, new_pos);
  be.alpha = 1.0;
  be.ancillas = n + 2;
  be.epsilon = 0.0;
  be.system_qubits = n;
  // One W costs one U and one controlled-U'; G uses two Ws, the two-term
  // combination two Gs, and the outer conjugation two more Ws: 12 total.
  be.ledger.instances["U"] = 12;
  be.ledger.ancilla_high_water = n + 2;
  return be;
}

NtcaResult ntca_transform(const PrepareOracle& u, const PolyMV& f,
                          int degree_bound, const Tolerances& tol) {
  u.validate(tol);
  if (f.num_vars() != 2)
    throw std::invalid_argument("ntca_transform: need a bivariate polynomial");

  const BlockEncoding be_re = amplitude_be(u, AmplitudePart::Real);
  const BlockEncoding be_im = amplitude_be(u, AmplitudePart::Imag);
  QetResult qet = mqet({be_re, be_im}, f, degree_bound, tol);

  const long long nd = u.unitary.rows();
  StateVector uniform =
      StateVector::Constant(nd, Complex(1.0 / std::sqrt(double(nd)), 0.0));
  Postselection ps = run_on_state(qet, uniform, tol);

  NtcaResult out;
  out.state = std::move(ps.state);
  out.success_probability = ps.success_probability;
  out.report = std::move(qet.report);
  out.report.notes["expected_repetitions"] = 1.0 / ps.success_probability;
  out.report.notes["success_probability"] = ps.success_probability;
  return out;
}

}  // namespace qetkit
