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

#include "qetkit/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qetkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxChebDegree = 512;

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

// Compensated complex accumulator; keeps coefficient projections stable
// for degrees well past 64.
struct KahanSum {
  Complex sum{0.0, 0.0};
  Complex c{0.0, 0.0};

  void add(Complex x) {
    Complex y = x - c;
    Complex t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Poly1::Poly1(std::vector<Complex> coefficients) : c_(std::move(coefficients)) {
  while (c_.size() > 1 && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
  if (c_.empty()) c_.push_back(Complex(0.0, 0.0));
}

bool Poly1::is_zero() const {
  for (const auto& v : c_)
    if (v != Complex(0.0, 0.0)) return false;
  return true;
}

Complex Poly1::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size()))
    return Complex(0.0, 0.0);
  return c_[static_cast<std::size_t>(power)];
}

Complex Poly1::operator()(Complex x) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (degree() == 0) return Poly1({Complex(0.0, 0.0)});
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = double(i) * c_[i];
  return Poly1(std::move(d));
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Complex> out(std::max(c_.size(), o.c_.size()), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Poly1(std::move(out));
}

Poly1 Poly1::operator-(const Poly1& o) const {
  return *this + o * Complex(-1.0, 0.0);
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1({Complex(0.0, 0.0)});
  std::vector<Complex> out(c_.size() + o.c_.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Poly1(std::move(out));
}

Poly1 Poly1::operator*(Complex scale) const {
  std::vector<Complex> out(c_);
  for (auto& v : out) v *= scale;
  return Poly1(std::move(out));
}

Poly1 Poly1::deflate(double root) const {
  if (degree() < 1) return Poly1({Complex(0.0, 0.0)});
  const int d = degree();
  std::vector<Complex> q(static_cast<std::size_t>(d));
  Complex carry = c_[static_cast<std::size_t>(d)];
  for (int j = d - 1; j >= 0; --j) {
    q[static_cast<std::size_t>(j)] = carry;
    carry = c_[static_cast<std::size_t>(j)] + root * carry;
  }
  return Poly1(std::move(q));
}

Poly1 cheb_T(int k) {
  if (k < 0 || k > kMaxChebDegree)
    throw std::invalid_argument("cheb_T: degree out of range");
  if (k == 0) return Poly1({Complex(1.0, 0.0)});
  if (k == 1) return Poly1({Complex(0.0, 0.0), Complex(1.0, 0.0)});
  std::vector<double> prev{1.0};        // T_0
  std::vector<double> cur{0.0, 1.0};    // T_1
  for (int n = 1; n < k; ++n) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<Complex> out(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) out[i] = Complex(cur[i], 0.0);
  return Poly1(std::move(out));
}

Poly1 cheb_T_closed_form(int k) {
  if (k < 0 || k > kMaxChebDegree)
    throw std::invalid_argument("cheb_T_closed_form: degree out of range");
  if (k == 0) return Poly1({Complex(1.0, 0.0)});
  std::vector<Complex> out(static_cast<std::size_t>(k) + 1, Complex(0.0, 0.0));
  for (int j = 0; j <= k / 2; ++j) {
    double term = 0.5 * double(k) * std::pow(2.0, k - 2 * j) /
                  double(k - j) * binomial(k - j, j);
    if (j % 2 == 1) term = -term;
    out[static_cast<std::size_t>(k - 2 * j)] = Complex(term, 0.0);
  }
  return Poly1(std::move(out));
}

double monomial_cheb_inner(int j, int m) {
  if (j < 0 || m < 0)
    throw std::invalid_argument("monomial_cheb_inner: negative index");
  if (j > m || (m - j) % 2 != 0) return 0.0;
  const int c = (m - j) / 2;
  if (m <= 60) return kPi * binomial(m, c) / std::pow(2.0, m);
  return kPi * std::exp(std::lgamma(m + 1.0) - std::lgamma(c + 1.0) -
                        std::lgamma(m - c + 1.0) - m * std::log(2.0));
}

ChebSeries1 cheb_coeffs(const Poly1& p) {
  if (p.degree() > kMaxChebDegree)
    throw std::invalid_argument("cheb_coeffs: degree out of range");
  ChebSeries1 out;
  out.coefficients.resize(static_cast<std::size_t>(p.degree()) + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    KahanSum acc;
    for (int m = k; m <= p.degree(); m += 2)
      acc.add(p.coefficient(m) * monomial_cheb_inner(k, m));
    const double weight = (k == 0 ? 1.0 : 2.0) / kPi;
    out.coefficients[static_cast<std::size_t>(k)] = weight * acc.sum;
  }
  return out;
}

Poly1 ChebSeries1::to_poly() const {
  Poly1 acc({Complex(0.0, 0.0)});
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    acc = acc + cheb_T(static_cast<int>(k)) * coefficients[k];
  return acc;
}

Complex cheb_gauss_quadrature(const Poly1& p, int nodes) {
  if (nodes < 1) throw std::invalid_argument("cheb_gauss_quadrature: nodes < 1");
  if (p.degree() >= 2 * nodes)
    throw std::invalid_argument(
        "cheb_gauss_quadrature: degree too high for node count");
  KahanSum acc;
  for (int i = 0; i < nodes; ++i)
    acc.add(p(std::cos((2 * i + 1) * kPi / (2.0 * nodes))));
  return acc.sum * (kPi / nodes);
}

std::vector<double> cheb_points(int n) {
  if (n < 1) throw std::invalid_argument("cheb_points: n < 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l)
    out[static_cast<std::size_t>(l)] = std::cos((2 * l + 1) * kPi / (2.0 * n));
  return out;
}

Poly1 lagrange_basis(const std::vector<double>& nodes, int k,
                     const Tolerances& tol) {
  const int n = static_cast<int>(nodes.size());
  if (n < 1) throw std::invalid_argument("lagrange_basis: no nodes");
  if (k < 0 || k >= n) throw std::out_of_range("lagrange_basis: bad index");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::abs(nodes[a] - nodes[b]) <= tol.node_min_gap)
        throw PreconditionError("DuplicateNodes",
                                "lagrange_basis: nodes closer than the "
                                "minimum gap");
  Poly1 acc({Complex(1.0, 0.0)});
  for (int l = 0; l < n; ++l) {
    if (l == k) continue;
    const double scale = 1.0 / (nodes[static_cast<std::size_t>(k)] -
                                nodes[static_cast<std::size_t>(l)]);
    acc = acc * Poly1({Complex(-nodes[static_cast<std::size_t>(l)] * scale, 0.0),
                       Complex(scale, 0.0)});
  }
  return acc;
}

double chebint_lagrange(int n, int i, int k) {
  if (n < 1) throw std::invalid_argument("chebint_lagrange: n < 1");
  if (i < 0 || i >= n) throw std::out_of_range("chebint_lagrange: bad index");
  if (k < 0) throw std::invalid_argument("chebint_lagrange: negative k");
  if (n == 1) return k == 0 ? kPi : 0.0;  // L is the constant 1

  const std::vector<double> nodes = cheb_points(n);
  const Poly1 t_n = cheb_T(n);
  const Poly1 q = t_n.deflate(nodes[static_cast<std::size_t>(i)]);
  const Complex denom = q(nodes[static_cast<std::size_t>(i)]);

  KahanSum acc;
  for (int j = k; j <= q.degree(); j += 2)
    acc.add(q.coefficient(j) * monomial_cheb_inner(k, j));
  return (acc.sum / denom).real();
}

namespace {

// Ternary-search refinement of |p| over a bracket in theta (x = cos(theta)
// on [-1,1], or an affine image of it). Evaluation-only, so the result
// never exceeds the true supremum.
double refine_theta(const Poly1& p, double mid, double half, double tlo,
                    double thi) {
  for (int it = 0; it < 90; ++it) {
    const double m1 = tlo + (thi - tlo) / 3.0;
    const double m2 = thi - (thi - tlo) / 3.0;
    const double f1 = std::abs(p(mid + half * std::cos(m1)));
    const double f2 = std::abs(p(mid + half * std::cos(m2)));
    if (f1 < f2)
      tlo = m1;
    else
      thi = m2;
  }
  return std::abs(p(mid + half * std::cos(0.5 * (tlo + thi))));
}

}  // namespace

double sup_norm_on(const Poly1& p, double lo, double hi, int grid) {
  if (p.is_zero()) return 0.0;
  const int g = grid > 0 ? grid : std::max(8, 4 * p.degree());
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double best = 0.0;
  int best_j = 0;
  for (int j = 0; j <= g; ++j) {
    const double v = std::abs(p(mid + half * std::cos(j * kPi / g)));
    if (v > best) {
      best = v;
      best_j = j;
    }
  }
  const double tlo = (best_j > 0 ? best_j - 1 : 0) * kPi / g;
  const double thi = (best_j < g ? best_j + 1 : g) * kPi / g;
  return std::max(best, refine_theta(p, mid, half, tlo, thi));
}

double sup_norm(const Poly1& p, int grid) {
  return sup_norm_on(p, -1.0, 1.0, grid);
}

}  // namespace qetkit
