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

#include "qetkit/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qetkit {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 60) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
  }
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= double(i);
  return r;
}

}  // namespace

PolyMV tensor_interpolate(const FunctionSpec& f, std::span<const int> degrees) {
  const int d = f.arity;
  if (d < 1 || static_cast<int>(degrees.size()) != d)
    throw std::invalid_argument("tensor_interpolate: arity mismatch");
  for (int n : degrees)
    if (n < 1)
      throw std::invalid_argument("tensor_interpolate: node counts must be >= 1");
  if (!f.eval) throw std::invalid_argument("tensor_interpolate: no blackbox");

  // Per-axis nodes and monomial-expanded Lagrange bases.
  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(d));
  std::vector<std::vector<Poly1>> bases(static_cast<std::size_t>(d));
  for (int v = 0; v < d; ++v) {
    nodes[static_cast<std::size_t>(v)] = cheb_points(degrees[static_cast<std::size_t>(v)]);
    bases[static_cast<std::size_t>(v)].reserve(
        static_cast<std::size_t>(degrees[static_cast<std::size_t>(v)]));
    for (int k = 0; k < degrees[static_cast<std::size_t>(v)]; ++k)
      bases[static_cast<std::size_t>(v)].push_back(
          lagrange_basis(nodes[static_cast<std::size_t>(v)], k));
  }

  // Sample f on the tensor grid.
  std::size_t total = 1;
  for (int n : degrees) total *= static_cast<std::size_t>(n);
  std::vector<Complex> values(total);
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int v = 0; v < d; ++v)
      x[static_cast<std::size_t>(v)] =
          nodes[static_cast<std::size_t>(v)][static_cast<std::size_t>(
              k[static_cast<std::size_t>(v)])];
    Complex val = f.eval(x);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
      throw PreconditionError("NonFiniteSample",
                              "tensor_interpolate: blackbox returned a "
                              "non-finite value");
    values[flat] = val;
    int v = d - 1;
    while (v >= 0) {
      if (++k[static_cast<std::size_t>(v)] < degrees[static_cast<std::size_t>(v)]) break;
      k[static_cast<std::size_t>(v)] = 0;
      --v;
    }
  }

  // Convert node values to monomial coefficients one axis at a time.
  // Axis v transform: new[e, rest] = sum_k Lcoef_v[k][e] * old[k, rest].
  std::vector<Complex> cur = std::move(values);
  for (int v = d - 1; v >= 0; --v) {
    const std::size_t extent = static_cast<std::size_t>(degrees[static_cast<std::size_t>(v)]);
    std::size_t inner = 1;
    for (int u = v + 1; u < d; ++u) inner *= static_cast<std::size_t>(degrees[static_cast<std::size_t>(u)]);
    const std::size_t outer = cur.size() / (extent * inner);
    std::vector<Complex> next(cur.size(), Complex(0.0, 0.0));
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t kk = 0; kk < extent; ++kk) {
        const Poly1& basis = bases[static_cast<std::size_t>(v)][kk];
        for (int e = 0; e <= basis.degree(); ++e) {
          const Complex w = basis.coefficient(e);
          if (w == Complex(0.0, 0.0)) continue;
          const std::size_t src = (o * extent + kk) * inner;
          const std::size_t dst = (o * extent + static_cast<std::size_t>(e)) * inner;
          for (std::size_t in = 0; in < inner; ++in)
            next[dst + in] += w * cur[src + in];
        }
      }
    cur = std::move(next);
  }

  PolyMV out(d, std::vector<int>(degrees.begin(), degrees.end()));
  out.coefficients() = std::move(cur);
  return out;
}

double jackson_bound_2d(int k, double m_k, int n1, int n2) {
  if (k < 0 || k > n1 || k > n2)
    throw std::invalid_argument("jackson_bound_2d: need 0 <= k <= n1, n2");
  return std::pow(kPi / 2.0, k) * m_k / factorial(k) * double(n1) *
         std::log2(double(n2)) / binomial(n2 + 1, k);
}

double jackson_bound_dd(int k, double m_k, std::span<const int> degrees) {
  const int d = static_cast<int>(degrees.size());
  if (d < 2) throw std::invalid_argument("jackson_bound_dd: need d >= 2");
  for (int n : degrees)
    if (k < 0 || k > n)
      throw std::invalid_argument("jackson_bound_dd: need 0 <= k <= n_l");
  double sum = 0.0;
  double prefix = 1.0;  // prod_{j < l} n_j, 1-based
  for (int l = 2; l <= d; ++l) {
    prefix *= double(degrees[static_cast<std::size_t>(l - 2)]);
    const int nl = degrees[static_cast<std::size_t>(l - 1)];
    sum += std::log2(double(nl)) / binomial(nl + 1, k) * prefix;
  }
  return std::pow(kPi / 2.0, k) * m_k / factorial(k) * sum;
}

double modulus_of_continuity(const FunctionSpec& f, double delta) {
  if (f.arity != 1)
    throw std::invalid_argument("modulus_of_continuity: univariate only");
  if (delta <= 0.0)
    throw std::invalid_argument("modulus_of_continuity: delta must be > 0");
  const int n = 10000;
  const double h = 2.0 / (n - 1);
  std::vector<Complex> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + i * h;
    vals[static_cast<std::size_t>(i)] = f.eval(std::span<const double>(&x, 1));
  }
  // |x_i - x_j| < delta  <=>  |i - j| <= w with w the last strict index.
  int w = static_cast<int>(std::ceil(delta / h)) - 1;
  w = std::clamp(w, 0, n - 1);
  double best = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= std::min(i + w, n - 1); ++j)
      best = std::max(best, std::abs(vals[static_cast<std::size_t>(i)] -
                                     vals[static_cast<std::size_t>(j)]));
  return best;
}

namespace {

double eval_abs(const PolyMV& p, std::vector<double>& x) {
  return std::abs(p(std::span<const double>(x.data(), x.size())));
}

}  // namespace

double sup_norm_estimate(const PolyMV& p, int grid_per_axis) {
  if (grid_per_axis < 4 * p.max_degree())
    throw std::invalid_argument(
        "sup_norm_estimate: grid must be at least 4x the max degree");
  const int g = std::max(grid_per_axis, 8);
  const int d = p.num_vars();

  std::vector<double> grid(static_cast<std::size_t>(g) + 1);
  for (int j = 0; j <= g; ++j)
    grid[static_cast<std::size_t>(j)] = std::cos(j * kPi / g);

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  std::vector<double> best_x(static_cast<std::size_t>(d), 1.0);
  double best = 0.0;
  for (;;) {
    for (int v = 0; v < d; ++v)
      x[static_cast<std::size_t>(v)] =
          grid[static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])];
    const double val = eval_abs(p, x);
    if (val > best) {
      best = val;
      best_x = x;
    }
    int v = d - 1;
    while (v >= 0) {
      if (++idx[static_cast<std::size_t>(v)] <= g) break;
      idx[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
  }

  // Coordinatewise refinement around the winning grid point. Evaluation
  // only, so the estimate stays below the true supremum.
  x = best_x;
  const double dtheta = kPi / g;
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int v = 0; v < d; ++v) {
      double theta = std::acos(std::clamp(x[static_cast<std::size_t>(v)], -1.0, 1.0));
      double tlo = std::max(0.0, theta - dtheta);
      double thi = std::min(kPi, theta + dtheta);
      for (int it = 0; it < 60; ++it) {
        const double m1 = tlo + (thi - tlo) / 3.0;
        const double m2 = thi - (thi - tlo) / 3.0;
        x[static_cast<std::size_t>(v)] = std::cos(m1);
        const double f1 = eval_abs(p, x);
        x[static_cast<std::size_t>(v)] = std::cos(m2);
        const double f2 = eval_abs(p, x);
        if (f1 < f2)
          tlo = m1;
        else
          thi = m2;
      }
      x[static_cast<std::size_t>(v)] = std::cos(0.5 * (tlo + thi));
      best = std::max(best, eval_abs(p, x));
    }
  }
  return best;
}

double sup_norm_estimate(const PolyMV& p) {
  return sup_norm_estimate(p, std::max(8, 4 * p.max_degree()));
}

}  // namespace qetkit
