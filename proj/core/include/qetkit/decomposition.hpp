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

#include <span>
#include <vector>

#include "qetkit/approx.hpp"
#include "qetkit/polymv.hpp"

namespace qetkit {

/// One term of a sum-of-products decomposition: Chebyshev index vector s
/// over the first r variables, tail polynomial Q_s in the last variable,
/// and weight beta_s = ||Q_s||_inf * prod ||T_{s_k}||_inf.
struct DecompositionTerm {
  std::vector<int> s;
  Poly1 q;
  double beta = 0.0;
};

/// g(x) = sum_s Q_s(x_r) prod_k T_{s_k}(x_k), terms in lexicographic s
/// order. When `normalized` is set the stored tails have unit sup norm and
/// beta carries the scale, so evaluation weighs each term by beta_s.
struct ProductDecomposition {
  int chebyshev_vars = 0;  // r
  int degree_bound = 0;    // D: indices s range over [[D]]^r
  bool normalized = false;
  std::vector<DecompositionTerm> terms;

  Complex evaluate(std::span<const double> x) const;  // x has r+1 entries
  double beta_l1() const;
  int nonzero_terms() const { return static_cast<int>(terms.size()); }
};

/// Chebyshev projection of a bivariate polynomial: P_k = T_k and
/// Q_k(y) = (2 - delta_{k,0})/pi * integral of G(x,y) T_k(x) dx/sqrt(1-x^2),
/// evaluated coefficientwise through monomial_cheb_inner (exact sums).
/// Terms whose tail vanishes (relative sup below tol.zero_term_drop) are
/// dropped. If ||G||_inf <= 1 then ||Q_k||_inf <= 2 and sum beta <= 2D.
ProductDecomposition decompose_bivariate(const PolyMV& g, int degree_bound,
                                         const Tolerances& tol = {});

/// Iterated projection over the first r variables of an (r+1)-variate
/// polynomial; reduces to decompose_bivariate at r = 1. If ||g||_inf <= 1
/// then sum beta <= (2D-1)^r.
ProductDecomposition decompose_multivariate(const PolyMV& g, int degree_bound,
                                            const Tolerances& tol = {});

/// Rescales every tail to unit sup norm, restamping beta_s with the scale
/// (a fixed point on already-normalized input). Zero-weight terms are
/// dropped first.
ProductDecomposition normalize(const ProductDecomposition& dec);

/// D x D matrix with entry (l, m) = coefficient of x^l y^m, zero at or
/// above the anti-diagonal l + m = D.
ComplexMatrix coefficient_matrix(const PolyMV& g, int degree_bound);

/// Numerical rank of the coefficient matrix (singular values above
/// 1e-9 * sigma_max). Lower bound on the number of product terms in any
/// P_k(x) Q_k(y) decomposition of G.
int rank_certificate(const PolyMV& g, int degree_bound);

}  // namespace qetkit
