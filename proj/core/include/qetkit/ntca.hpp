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

#pragma once

#include "qetkit/qet.hpp"

namespace qetkit {

/// State-preparation oracle: a unitary whose first column holds the
/// amplitudes c_k of the prepared state.
struct PrepareOracle {
  ComplexMatrix unitary;

  int qubits() const;
  StateVector amplitudes() const { return unitary.col(0); }
  void validate(const Tolerances& tol = {}) const;
};

enum class WVariant { Plain, Prime };  // Prime inserts S before the final H
enum class AmplitudePart { Real, Imag };

/// The amplitude-comparison gate on 2n+1 qubits (|k> register, n-qubit
/// work register, flag): H on the flag, U on the work register, a
/// flag-controlled U-adjoint, a flag-controlled register-compare CNOT fan,
/// then (S for the prime variant and) H. Maps |k>|0^n>|0> to
/// (|k>|v>|+> + |k>|k>|->)/sqrt(2).
ComplexMatrix build_w(const PrepareOracle& u, WVariant variant);

/// W S0 W' Z with S0 the reflection about the all-zeros state of the
/// bottom two registers. Block-diagonal over the |k> register; the k-th
/// sector has eigenvalues -re(c_k) +- i sqrt(1 - re(c_k)^2) (prime variant:
/// im(c_k)).
ComplexMatrix build_g(const PrepareOracle& u, WVariant variant);

/// Encoding of diag(re c_k) or diag(im c_k): a two-term combination of G
/// and its adjoint conjugated by W, with registers rearranged so the |k>
/// register is the system. The combination carries a global sign so the
/// encoded diagonal comes out with positive orientation.
BlockEncoding amplitude_be(const PrepareOracle& u, AmplitudePart part);

struct NtcaResult {
  StateVector state;
  double success_probability;
  CostReport report;
};

/// Applies the bivariate polynomial F to every amplitude of the prepared
/// state: builds the two amplitude encodings, runs the multivariate
/// eigenvalue transform on them, applies the result to the uniform state,
/// and postselects. The report includes the expected repetition count
/// 1/success_probability.
NtcaResult ntca_transform(const PrepareOracle& u, const PolyMV& f,
                          int degree_bound, const Tolerances& tol = {});

}  // namespace qetkit
