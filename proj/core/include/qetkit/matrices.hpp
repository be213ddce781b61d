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

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qetkit/errors.hpp"
#include "qetkit/tolerances.hpp"

namespace qetkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

bool is_power_of_two(long long n);

/// log2 of a power of two; throws std::invalid_argument otherwise.
int log2_exact(long long n);

/// Largest singular value. Exact dense SVD; relative accuracy ~1e-10.
double operator_norm(const ComplexMatrix& a);

/// ||U'U - I||. Exact for dim <= 256, power-iteration estimate above
/// (the defect matrix is Hermitian, so the estimate converges to the
/// operator norm).
double unitarity_defect(const ComplexMatrix& u);

bool is_unitary(const ComplexMatrix& u, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);

struct Eigendecomposition {
  std::vector<Complex> eigenvalues;
  ComplexMatrix eigenvectors;  // unitary; column k pairs with eigenvalues[k]
};

/// Diagonalizes a normal matrix as M = U diag(lambda) U'.
/// Throws PreconditionError("NotNormal") if ||MM' - M'M|| exceeds
/// tol.normality.
Eigendecomposition eigendecompose_normal(const ComplexMatrix& m,
                                         const Tolerances& tol = {});

struct SimultaneousEigenbasis {
  ComplexMatrix basis;                       // one unitary V for the family
  std::vector<Eigen::VectorXd> eigenvalues;  // eigenvalues[l][k] pairs V.col(k)
};

/// Shared orthonormal eigenbasis of pairwise-commuting Hermitian matrices.
/// Diagonalizes a random real combination of the family and verifies every
/// member against the resulting basis, retrying with fresh coefficients up
/// to five times (generic combinations split degeneracies).
SimultaneousEigenbasis simultaneous_eigenbasis(
    const std::vector<ComplexMatrix>& family, const Tolerances& tol = {});

using MultivariateFunction = std::function<Complex(std::span<const Complex>)>;

/// Exact reference for functions of a commuting (normal) family:
/// V f(Lambda_0, ..., Lambda_r) V'. This is the oracle every pipeline is
/// verified against.
ComplexMatrix matrix_function_oracle(const std::vector<ComplexMatrix>& family,
                                     const MultivariateFunction& f,
                                     const Tolerances& tol = {});

struct Postselection {
  StateVector state;           // normalized projected state
  double success_probability;  // squared norm of the projected component
};

/// Projects the leading ancilla register (most significant qubits) onto
/// |0...0> and renormalizes. Throws PreconditionError("ZeroProbability")
/// when the projected norm is below tol.zero_probability.
Postselection postselect_zero_ancilla(const StateVector& state,
                                      int ancilla_qubits,
                                      const Tolerances& tol = {});

}  // namespace qetkit
