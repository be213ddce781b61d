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

#include <map>
#include <string>
#include <vector>

#include "qetkit/matrices.hpp"

namespace qetkit {

/// Per-oracle instance counts plus the charged-ancilla high-water mark.
/// Counts follow the QSP-style accounting: composition adds counts, a
/// degree-d polynomial transform charges 2d instances of each underlying
/// oracle. The high-water mark tracks the ancilla tally of the accounting
/// model, which can exceed the physical ancilla count of the emulation
/// backend.
struct CostLedger {
  std::map<std::string, long long> instances;
  int ancilla_high_water = 0;

  void add_counts(const CostLedger& other);
  void set_all_counts(long long value);
  long long total() const;
};

/// A unitary together with the (alpha, a, eps) contract: the top-left
/// system block of `unitary`, scaled by alpha, approximates the encoded
/// matrix to error epsilon. Ancilla register first (most significant
/// qubits), so the encoded block sits in the top-left corner.
struct BlockEncoding {
  ComplexMatrix unitary;
  double alpha = 1.0;
  int ancillas = 0;
  double epsilon = 0.0;
  int system_qubits = 0;
  CostLedger ledger;

  long long dim() const { return 1LL << (ancillas + system_qubits); }
  long long system_dim() const { return 1LL << system_qubits; }

  /// Checks alpha > 0, epsilon >= 0, dimension bookkeeping, and unitarity
  /// within tol.unitarity; throws PreconditionError on violation.
  void validate(const Tolerances& tol = {}) const;
};

/// alpha * (<0^a| x I) U (|0^a> x I): the encoded matrix.
ComplexMatrix extract_block(const BlockEncoding& be);

/// ||target - extract_block(be)||; callers assert <= be.epsilon.
double verify_be(const BlockEncoding& be, const ComplexMatrix& target);

/// Exact one-ancilla unitary completion of the contraction A/alpha:
///   [[A/alpha, sqrt(I - (A/alpha)(A/alpha)')],
///    [sqrt(I - (A/alpha)'(A/alpha)), -(A/alpha)']]
/// giving a zero-error encoding of A with subnormalization alpha. Throws
/// PreconditionError("NormTooLarge") when ||A/alpha|| > 1 + slack.
BlockEncoding dilate(const ComplexMatrix& a, double alpha,
                     const std::string& oracle_name = "U_M",
                     const Tolerances& tol = {});

/// Encoding of the adjoint block with unchanged (alpha, a, eps); adjoint
/// uses are charged to the same oracle names.
BlockEncoding adjoint(const BlockEncoding& be);

/// Product wiring: each factor acts on its own ancilla register plus the
/// shared system register. Parameters compose exactly as
/// (alpha*beta, a+b, alpha*eps_B + beta*eps_A); ledgers add.
BlockEncoding product(const BlockEncoding& a, const BlockEncoding& b);

/// Prepare/select combination encoding sum_j c_j * (alpha_j * block_j).
/// Zero-coefficient terms are dropped and charged nothing; the remaining
/// terms are padded to a power of two (at least one select qubit) with
/// zero-weight identity terms, and ancilla registers are padded to the
/// widest term. Coefficient magnitudes enter the prepare oracle, phases
/// the select oracle. Resulting parameters:
///   alpha = sum |c_j alpha_j|, ancillas = max_j a_j + log2 K',
///   eps = sum |c_j| eps_j.
BlockEncoding lcu(const std::vector<BlockEncoding>& terms,
                  const std::vector<Complex>& coefficients,
                  const Tolerances& tol = {});

/// Kronecker product helper (left factor on the more significant qubits).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Any unitary whose first column is the given nonnegative amplitude
/// vector (Householder completion). Only the action on |0...0> matters.
ComplexMatrix prepare_oracle_unitary(const std::vector<double>& amplitudes);

/// Applies the encoding to |0^a> x v and postselects the ancillas on zero.
Postselection apply_and_postselect(const BlockEncoding& be,
                                   const StateVector& v,
                                   const Tolerances& tol = {});

}  // namespace qetkit
