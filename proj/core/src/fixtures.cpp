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

#include "qetkit/fixtures.hpp"

#include <cmath>

#include "qetkit/approx.hpp"

namespace qetkit {

namespace {

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return Complex(re, im);
}

}  // namespace

ComplexMatrix random_complex_matrix(int dim, std::mt19937_64& rng) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = gaussian(rng);
  return m;
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  const ComplexMatrix m = random_complex_matrix(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

ComplexMatrix random_normal_matrix(int dim, std::mt19937_64& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  StateVector diag(dim);
  for (int i = 0; i < dim; ++i) {
    // Uniform over the closed unit disk.
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * M_PI * unit(rng);
    diag(i) = std::polar(radius, angle);
  }
  return u * diag.asDiagonal() * u.adjoint();
}

std::vector<ComplexMatrix> random_commuting_hermitians(int dim, int count,
                                                       std::mt19937_64& rng) {
  const ComplexMatrix v = random_unitary(dim, rng);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    Eigen::VectorXd diag(dim);
    for (int i = 0; i < dim; ++i) diag(i) = unit(rng);
    ComplexMatrix m = v * diag.cast<Complex>().asDiagonal() * v.adjoint();
    out.push_back(0.5 * (m + m.adjoint()));
  }
  return out;
}

ComplexMatrix random_contraction(int dim, std::mt19937_64& rng) {
  ComplexMatrix m = random_complex_matrix(dim, rng);
  const double norm = operator_norm(m);
  if (norm > 0.0) m /= norm * (1.0 + 1e-12);
  return m;
}

StateVector random_state(int dim, std::mt19937_64& rng) {
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = gaussian(rng);
  v.normalize();
  return v;
}

PolyMV random_polymv(int num_vars, int degree_bound, std::mt19937_64& rng) {
  PolyMV p(num_vars, std::vector<int>(static_cast<std::size_t>(num_vars),
                                      degree_bound));
  for (auto& c : p.coefficients()) c = gaussian(rng);
  return p;
}

PolyMV random_unit_sup_polymv(int num_vars, int degree_bound,
                              std::mt19937_64& rng) {
  PolyMV p = random_polymv(num_vars, degree_bound, rng);
  const double sup = sup_norm_estimate(p);
  return p * Complex(1.0 / sup, 0.0);
}

}  // namespace qetkit
