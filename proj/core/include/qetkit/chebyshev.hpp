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

#include <vector>

#include "qetkit/matrices.hpp"

namespace qetkit {

/// Univariate polynomial with complex coefficients in the monomial basis
/// (index = power). Trailing exact zeros are trimmed on construction.
class Poly1 {
 public:
  Poly1() : c_{Complex(0.0, 0.0)} {}
  explicit Poly1(std::vector<Complex> coefficients);

  static Poly1 constant(Complex c) { return Poly1({c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const;
  const std::vector<Complex>& coefficients() const { return c_; }
  Complex coefficient(int power) const;

  Complex operator()(Complex x) const;
  Complex operator()(double x) const { return (*this)(Complex(x, 0.0)); }

  Poly1 derivative() const;
  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 operator*(Complex scale) const;

  /// Synthetic division by (x - root); the remainder is discarded.
  Poly1 deflate(double root) const;

 private:
  std::vector<Complex> c_;
};

/// Coefficients in the Chebyshev basis {T_k}.
struct ChebSeries1 {
  std::vector<Complex> coefficients;

  Poly1 to_poly() const;
};

/// T_k in the monomial basis via the three-term recurrence
/// T_{k+1} = 2x T_k - T_{k-1}. Supports k <= 512.
Poly1 cheb_T(int k);

/// T_k via the explicit alternating binomial sum; cross-check for cheb_T.
Poly1 cheb_T_closed_form(int k);

/// Integral of T_j(x) x^m against dx/sqrt(1-x^2) on [-1,1]:
/// pi/2^m * binom(m, (m-j)/2) when m >= j with matching parity, else 0.
double monomial_cheb_inner(int j, int m);

/// Chebyshev coefficients of p, computed coefficientwise through
/// monomial_cheb_inner (exact sums, no quadrature). deg p <= 512.
ChebSeries1 cheb_coeffs(const Poly1& p);

/// Chebyshev-Gauss quadrature (pi/nodes) * sum p(cos((2i+1)pi/(2 nodes))).
/// Exact for deg p < 2*nodes; throws on higher degree.
Complex cheb_gauss_quadrature(const Poly1& p, int nodes);

/// Roots of T_n: cos((2l+1)pi/(2n)), l = 0..n-1, strictly decreasing.
std::vector<double> cheb_points(int n);

/// Interpolating polynomial L with L(nodes[k]) = 1 and L(nodes[j]) = 0
/// for j != k. Throws PreconditionError("DuplicateNodes") when two nodes
/// are closer than tol.node_min_gap.
Poly1 lagrange_basis(const std::vector<double>& nodes, int k,
                     const Tolerances& tol = {});

/// Integral of T_k(x) L_n^(i)(x) against dx/sqrt(1-x^2), where L_n^(i) is
/// the Lagrange basis polynomial over the n Chebyshev points. Evaluated as
/// a finite sum: deflate T_n at the i-th node, pair the quotient with
/// monomial_cheb_inner, and divide by the quotient's value at the node.
double chebint_lagrange(int n, int i, int k);

/// Positive-interval helpers used for sup norms and Lipschitz bounds.
/// Chebyshev-Lobatto grid scan plus local ternary refinement; the result
/// never exceeds the true supremum. grid == 0 picks max(4*deg, 8) + 1
/// points.
double sup_norm(const Poly1& p, int grid = 0);
double sup_norm_on(const Poly1& p, double lo, double hi, int grid = 0);

}  // namespace qetkit
