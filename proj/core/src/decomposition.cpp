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

#include "qetkit/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qetkit {

namespace {

constexpr double kPi = std::numbers::pi;

double cheb_eval(int k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

Complex ProductDecomposition::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != chebyshev_vars + 1)
    throw std::invalid_argument("ProductDecomposition: arity mismatch");
  Complex acc(0.0, 0.0);
  for (const auto& term : terms) {
    Complex v = term.q(x[static_cast<std::size_t>(chebyshev_vars)]);
    if (normalized) v *= term.beta;
    for (int k = 0; k < chebyshev_vars; ++k)
      v *= cheb_eval(term.s[static_cast<std::size_t>(k)],
                     x[static_cast<std::size_t>(k)]);
    acc += v;
  }
  return acc;
}

double ProductDecomposition::beta_l1() const {
  double t = 0.0;
  for (const auto& term : terms) t += term.beta;
  return t;
}

ProductDecomposition decompose_multivariate(const PolyMV& g, int degree_bound,
                                            const Tolerances& tol) {
  const int d = g.num_vars();
  if (d < 2)
    throw std::invalid_argument("decompose_multivariate: need >= 2 variables");
  if (degree_bound < 1)
    throw std::invalid_argument("decompose_multivariate: degree bound < 1");
  for (int b : g.degree_bounds())
    if (b > degree_bound)
      throw PreconditionError("DegreeOverflow",
                              "decompose_multivariate: per-variable degree "
                              "reaches the bound");
  const int r = d - 1;

  // Inner products of T_s against monomials, tabulated once.
  std::vector<std::vector<double>> mci(static_cast<std::size_t>(degree_bound));
  for (int s = 0; s < degree_bound; ++s) {
    mci[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(degree_bound));
    for (int l = 0; l < degree_bound; ++l)
      mci[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] =
          monomial_cheb_inner(s, l);
  }

  const auto& bounds = g.degree_bounds();
  const int tail_extent = bounds[static_cast<std::size_t>(r)];

  ProductDecomposition out;
  out.chebyshev_vars = r;
  out.degree_bound = degree_bound;
  out.normalized = false;

  std::vector<int> s(static_cast<std::size_t>(r), 0);
  std::vector<int> l(static_cast<std::size_t>(d), 0);
  std::vector<double> sups;
  for (;;) {
    double factor = 1.0;
    for (int k = 0; k < r; ++k)
      factor *= (s[static_cast<std::size_t>(k)] == 0 ? 1.0 : 2.0) / kPi;

    // q[m] = factor * sum_l g[l, m] * prod_k <T_{s_k}, x^{l_k}>.
    std::vector<Complex> q(static_cast<std::size_t>(tail_extent),
                           Complex(0.0, 0.0));
    std::fill(l.begin(), l.end(), 0);
    for (;;) {
      double w = 1.0;
      for (int k = 0; k < r; ++k)
        w *= mci[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])]
                [static_cast<std::size_t>(l[static_cast<std::size_t>(k)])];
      if (w != 0.0)
        q[static_cast<std::size_t>(l[static_cast<std::size_t>(r)])] +=
            w * g.at(l);
      int v = d - 1;
      while (v >= 0) {
        if (++l[static_cast<std::size_t>(v)] < bounds[static_cast<std::size_t>(v)])
          break;
        l[static_cast<std::size_t>(v)] = 0;
        --v;
      }
      if (v < 0) break;
    }
    for (auto& c : q) c *= factor;

    DecompositionTerm term;
    term.s = s;
    term.q = Poly1(std::move(q));
    sups.push_back(sup_norm(term.q));
    term.beta = sups.back();  // prod ||T_{s_k}||_inf = 1
    out.terms.push_back(std::move(term));

    int v = r - 1;
    while (v >= 0) {
      if (++s[static_cast<std::size_t>(v)] < degree_bound) break;
      s[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
  }

  // Drop terms whose tail vanishes relative to the largest one.
  const double max_sup = *std::max_element(sups.begin(), sups.end());
  const double cutoff = tol.zero_term_drop * max_sup;
  std::vector<DecompositionTerm> kept;
  for (auto& term : out.terms)
    if (term.beta > cutoff) kept.push_back(std::move(term));
  out.terms = std::move(kept);
  return out;
}

ProductDecomposition decompose_bivariate(const PolyMV& g, int degree_bound,
                                         const Tolerances& tol) {
  if (g.num_vars() != 2)
    throw std::invalid_argument("decompose_bivariate: need a bivariate input");
  return decompose_multivariate(g, degree_bound, tol);
}

ProductDecomposition normalize(const ProductDecomposition& dec) {
  if (dec.normalized) return dec;
  ProductDecomposition out;
  out.chebyshev_vars = dec.chebyshev_vars;
  out.degree_bound = dec.degree_bound;
  out.normalized = true;
  for (const auto& term : dec.terms) {
    const double s = sup_norm(term.q);
    if (s <= 0.0) continue;
    DecompositionTerm t;
    t.s = term.s;
    t.q = term.q * Complex(1.0 / s, 0.0);
    t.beta = s;
    out.terms.push_back(std::move(t));
  }
  return out;
}

ComplexMatrix coefficient_matrix(const PolyMV& g, int degree_bound) {
  if (g.num_vars() != 2)
    throw std::invalid_argument("coefficient_matrix: need a bivariate input");
  if (degree_bound < 1)
    throw std::invalid_argument("coefficient_matrix: degree bound < 1");
  for (int b : g.degree_bounds())
    if (b > degree_bound)
      throw PreconditionError("DegreeOverflow",
                              "coefficient_matrix: per-variable degree "
                              "reaches the bound");
  ComplexMatrix c = ComplexMatrix::Zero(degree_bound, degree_bound);
  const auto& bounds = g.degree_bounds();
  for (int l = 0; l < bounds[0]; ++l)
    for (int m = 0; m < bounds[1]; ++m) {
      if (l + m >= degree_bound) continue;
      const int e[2] = {l, m};
      c(l, m) = g.at(e);
    }
  return c;
}

int rank_certificate(const PolyMV& g, int degree_bound) {
  const ComplexMatrix c = coefficient_matrix(g, degree_bound);
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double cutoff = 1e-9 * sigma(0);
  int rank = 0;
  for (long i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return rank;
}

}  // namespace qetkit
