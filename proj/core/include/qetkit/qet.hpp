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
#include <utility>
#include <vector>

#include "qetkit/block_encoding.hpp"
#include "qetkit/decomposition.hpp"

namespace qetkit {

/// Measured-vs-claimed accounting for one pipeline run. `notes` carries
/// auxiliary claims (candidate ancilla tallies, error-propagation
/// variants, beta norms) keyed by name.
struct CostReport {
  std::map<std::string, long long> oracle_instances;
  int ancillas_used = 0;
  double subnormalization = 0.0;
  double epsilon_claimed = 0.0;
  double epsilon_measured = 0.0;
  long long instance_total = 0;
  long long instance_bound = 0;
  std::map<std::string, double> notes;
};

struct QetResult {
  BlockEncoding be;
  CostReport report;
  ProductDecomposition decomposition;
};

/// Polynomial-transform backend. ExactDilation evaluates p on the
/// extracted Hermitian block through its eigendecomposition and dilates
/// the result, charging the instance and ancilla budget of a phase-factor
/// QSP implementation without computing phase factors.
enum class QspBackend { ExactDilation };

/// M = A + iB with A, B commuting Hermitians, realized as two-term
/// prepare/select combinations of U_M and its adjoint with weights
/// (1/2, 1/2) and (-i/2, i/2). Throws PreconditionError("NotNormal") when
/// the extracted block is not normal within tol.near_normal_block.
std::pair<BlockEncoding, BlockEncoding> split_normal(const BlockEncoding& be_m,
                                                     const Tolerances& tol = {});

/// Encoding of p(A) for the Hermitian extracted block A, with
/// subnormalization 1. Requires ||p||_inf <= 1 + slack on [-1,1] and
/// spec(A) within [-1,1]. Charges one extra ancilla and 2*deg(p) instances
/// of each underlying oracle; claimed error is L_p * eps with L_p the
/// estimated sup of |p'| on [-1.01, 1.01].
BlockEncoding poly_be(const BlockEncoding& be, const Poly1& p,
                      QspBackend backend = QspBackend::ExactDilation,
                      const Tolerances& tol = {});

/// Eigenvalue transformation of a normal matrix by a bivariate polynomial
/// g(Re z, Im z): split, per-term Chebyshev/tail transforms, pairwise
/// products, and a final weighted combination. The report checks the
/// ancilla tally 2m+4+d, the instance bound 4(D-1)D, and the
/// subnormalization claim alpha^2 ||beta||_1 against the constructed
/// values, and measures the block against the eigendecomposition oracle.
QetResult qet_normal(const BlockEncoding& be_m, const PolyMV& g,
                     int degree_bound, const Tolerances& tol = {});

/// Multivariate eigenvalue transformation for r+1 commuting Hermitian
/// encoded blocks. Instances are bounded by 2(D-1) r D^r at r >= 2; the
/// report also carries both candidate ancilla tallies (2m+4+d and m+4+d)
/// with a flag for whichever matches the constructed count.
QetResult mqet(const std::vector<BlockEncoding>& be_family, const PolyMV& g,
               int degree_bound, const Tolerances& tol = {});

/// exp(Mt) = exp(At) exp(iBt): a Chebyshev-truncated transform of A
/// rescaled by exp(|t|), multiplied by the exact unitary exp(i B t) of the
/// extracted B. A truncation shortfall against the 1e-6 target is
/// reported, not fatal.
BlockEncoding exp_normal(const BlockEncoding& be_m, double t,
                         int trunc_degree, CostReport* report = nullptr,
                         const Tolerances& tol = {});

/// Applies the resulting encoding to |0...0> x v and postselects.
Postselection run_on_state(const QetResult& result, const StateVector& v,
                           const Tolerances& tol = {});

}  // namespace qetkit
