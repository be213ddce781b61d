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

#include "qetkit/matrices.hpp"

#include <cmath>
#include <random>

namespace qetkit {

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(long long n) {
  if (!is_power_of_two(n))
    throw std::invalid_argument("log2_exact: " + std::to_string(n) +
                                " is not a power of two");
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("operator_norm: matrix must be square");
  if (a.rows() == 0) return 0.0;
  if (!a.allFinite())
    throw std::invalid_argument("operator_norm: non-finite entries");
  if (a.rows() <= 64) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("unitarity_defect: matrix must be square");
  const long n = u.rows();
  if (n <= 256) {
    ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::Identity(n, n);
    return operator_norm(defect);
  }
  // Power iteration on the Hermitian defect D = U'U - I via matvecs.
  StateVector v = StateVector::Ones(n);
  for (long i = 0; i < n; ++i) v(i) += Complex(0.0, 1e-3 * double(i % 7));
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 60; ++it) {
    StateVector w = u.adjoint() * (u * v) - v;
    double norm = w.norm();
    if (norm < 1e-300) return 0.0;
    lambda = norm;
    v = w / norm;
  }
  return lambda;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return operator_norm(ComplexMatrix(m - m.adjoint())) <= tol;
}

SimultaneousEigenbasis simultaneous_eigenbasis(
    const std::vector<ComplexMatrix>& family, const Tolerances& tol) {
  if (family.empty())
    throw std::invalid_argument("simultaneous_eigenbasis: empty family");
  const long n = family.front().rows();
  for (const auto& a : family) {
    if (a.rows() != n || a.cols() != n)
      throw std::invalid_argument(
          "simultaneous_eigenbasis: dimension mismatch");
    if (!is_hermitian(a, tol.hermiticity))
      throw PreconditionError("NotHermitian",
                              "simultaneous_eigenbasis: family member is not "
                              "Hermitian within tolerance");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ComplexMatrix comm = family[i] * family[j] - family[j] * family[i];
      if (operator_norm(comm) > tol.commutation)
        throw PreconditionError(
            "NotCommuting",
            "simultaneous_eigenbasis: family members do not commute within "
            "tolerance");
    }

  // A random real combination splits degeneracies with probability 1; a
  // fixed seed keeps the operation a pure function of its inputs.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int max_attempts = 5;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (const auto& a : family) h += gauss(rng) * a;
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) continue;
    const ComplexMatrix& v = solver.eigenvectors();

    SimultaneousEigenbasis result;
    result.basis = v;
    bool ok = true;
    for (const auto& a : family) {
      ComplexMatrix in_basis = v.adjoint() * a * v;
      Eigen::VectorXd diag = in_basis.diagonal().real();
      ComplexMatrix residual =
          a - v * diag.cast<Complex>().asDiagonal() * v.adjoint();
      if (operator_norm(residual) > tol.simultaneous_residual) {
        ok = false;
        break;
      }
      result.eigenvalues.push_back(std::move(diag));
    }
    if (ok) return result;
  }
  throw PreconditionError(
      "SimultaneousBasisNotFound",
      "simultaneous_eigenbasis: no shared basis after 5 random combinations");
}

Eigendecomposition eigendecompose_normal(const ComplexMatrix& m,
                                         const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigendecompose_normal: matrix must be square");
  ComplexMatrix comm = m * m.adjoint() - m.adjoint() * m;
  if (operator_norm(comm) > tol.normality)
    throw PreconditionError("NotNormal",
                            "eigendecompose_normal: ||MM' - M'M|| exceeds "
                            "tolerance");

  // A normal matrix splits into commuting Hermitian real/imaginary parts;
  // a shared basis for those diagonalizes M itself.
  ComplexMatrix re = 0.5 * (m + m.adjoint());
  ComplexMatrix im = Complex(0.0, -0.5) * (m - m.adjoint());
  Tolerances relaxed = tol;
  relaxed.commutation = std::max(tol.commutation, tol.normality);
  auto basis = simultaneous_eigenbasis({re, im}, relaxed);

  Eigendecomposition out;
  out.eigenvectors = basis.basis;
  out.eigenvalues.reserve(static_cast<std::size_t>(m.rows()));
  for (long k = 0; k < m.rows(); ++k)
    out.eigenvalues.emplace_back(basis.eigenvalues[0](k),
                                 basis.eigenvalues[1](k));
  return out;
}

ComplexMatrix matrix_function_oracle(const std::vector<ComplexMatrix>& family,
                                     const MultivariateFunction& f,
                                     const Tolerances& tol) {
  if (family.empty())
    throw std::invalid_argument("matrix_function_oracle: empty family");
  const long n = family.front().rows();

  // Real and imaginary parts of commuting normals commute pairwise, so one
  // Hermitian family covers the general case.
  std::vector<ComplexMatrix> parts;
  parts.reserve(2 * family.size());
  for (const auto& a : family) {
    parts.push_back(0.5 * (a + a.adjoint()));
    parts.push_back(Complex(0.0, -0.5) * (a - a.adjoint()));
  }
  auto basis = simultaneous_eigenbasis(parts, tol);

  StateVector values(n);
  std::vector<Complex> lambda(family.size());
  for (long k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < family.size(); ++l)
      lambda[l] = Complex(basis.eigenvalues[2 * l](k),
                          basis.eigenvalues[2 * l + 1](k));
    values(k) = f(lambda);
  }
  return basis.basis * values.asDiagonal() * basis.basis.adjoint();
}

Postselection postselect_zero_ancilla(const StateVector& state,
                                      int ancilla_qubits,
                                      const Tolerances& tol) {
  if (ancilla_qubits < 0)
    throw std::invalid_argument("postselect_zero_ancilla: negative ancillas");
  const long long dim = state.size();
  const long long block = 1LL << ancilla_qubits;
  if (!is_power_of_two(dim) || dim % block != 0)
    throw std::invalid_argument(
        "postselect_zero_ancilla: state dim is not 2^(a+n)");
  const long long n_dim = dim / block;

  StateVector head = state.head(n_dim);
  double prob = head.squaredNorm();
  if (prob < tol.zero_probability)
    throw PreconditionError("ZeroProbability",
                            "postselect_zero_ancilla: projected norm below "
                            "cutoff");
  Postselection out;
  out.state = head / std::sqrt(prob);
  out.success_probability = prob;
  return out;
}

}  // namespace qetkit
