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

#include "qetkit/polymv.hpp"

#include <algorithm>
#include <stdexcept>

namespace qetkit {

PolyMV::PolyMV(int num_vars, std::vector<int> degree_bounds)
    : num_vars_(num_vars), bounds_(std::move(degree_bounds)) {
  if (num_vars_ < 1)
    throw std::invalid_argument("PolyMV: need at least one variable");
  if (static_cast<int>(bounds_.size()) != num_vars_)
    throw std::invalid_argument("PolyMV: one degree bound per variable");
  std::size_t total = 1;
  for (int b : bounds_) {
    if (b < 1) throw std::invalid_argument("PolyMV: degree bounds must be >= 1");
    total *= static_cast<std::size_t>(b);
  }
  c_.assign(total, Complex(0.0, 0.0));
}

PolyMV PolyMV::from_poly1(const Poly1& p) {
  PolyMV out(1, {p.degree() + 1});
  for (int i = 0; i <= p.degree(); ++i)
    out.c_[static_cast<std::size_t>(i)] = p.coefficient(i);
  return out;
}

int PolyMV::max_degree() const {
  int m = 0;
  for (int b : bounds_) m = std::max(m, b - 1);
  return m;
}

std::size_t PolyMV::flat_index(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw std::invalid_argument("PolyMV: exponent arity mismatch");
  std::size_t idx = 0;
  for (int v = 0; v < num_vars_; ++v) {
    const int e = exponents[static_cast<std::size_t>(v)];
    if (e < 0 || e >= bounds_[static_cast<std::size_t>(v)])
      throw std::out_of_range("PolyMV: exponent outside degree bounds");
    idx = idx * static_cast<std::size_t>(bounds_[static_cast<std::size_t>(v)]) +
          static_cast<std::size_t>(e);
  }
  return idx;
}

Complex PolyMV::at(std::span<const int> exponents) const {
  return c_[flat_index(exponents)];
}

void PolyMV::set(std::span<const int> exponents, Complex value) {
  c_[flat_index(exponents)] = value;
}

Complex PolyMV::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != num_vars_)
    throw std::invalid_argument("PolyMV: evaluation arity mismatch");
  // Horner along the first variable, recursing over the flattened layout:
  // with last-variable-fastest storage, a slice at fixed leading exponent
  // is contiguous.
  std::size_t block = c_.size() / static_cast<std::size_t>(bounds_[0]);
  std::vector<Complex> slice(block);

  // Evaluate the trailing variables first by collapsing axes from the back.
  std::vector<Complex> cur(c_);
  for (int v = num_vars_ - 1; v >= 1; --v) {
    const std::size_t extent = static_cast<std::size_t>(bounds_[static_cast<std::size_t>(v)]);
    const std::size_t groups = cur.size() / extent;
    std::vector<Complex> next(groups);
    const Complex xv(x[static_cast<std::size_t>(v)], 0.0);
    for (std::size_t g = 0; g < groups; ++g) {
      Complex acc(0.0, 0.0);
      for (std::size_t e = extent; e-- > 0;)
        acc = acc * xv + cur[g * extent + e];
      next[g] = acc;
    }
    cur = std::move(next);
  }
  Complex acc(0.0, 0.0);
  const Complex x0(x[0], 0.0);
  for (std::size_t e = cur.size(); e-- > 0;) acc = acc * x0 + cur[e];
  return acc;
}

PolyMV PolyMV::operator*(Complex scale) const {
  PolyMV out = *this;
  for (auto& v : out.c_) v *= scale;
  return out;
}

PolyMV PolyMV::operator-(const PolyMV& o) const {
  if (o.num_vars_ != num_vars_)
    throw std::invalid_argument("PolyMV: arity mismatch in subtraction");
  std::vector<int> bounds(static_cast<std::size_t>(num_vars_));
  for (int v = 0; v < num_vars_; ++v)
    bounds[static_cast<std::size_t>(v)] =
        std::max(bounds_[static_cast<std::size_t>(v)],
                 o.bounds_[static_cast<std::size_t>(v)]);
  PolyMV out(num_vars_, bounds);

  std::vector<int> e(static_cast<std::size_t>(num_vars_), 0);
  auto accumulate = [&](const PolyMV& src, Complex sign) {
    std::fill(e.begin(), e.end(), 0);
    for (;;) {
      out.c_[out.flat_index(e)] += sign * src.at(e);
      int v = num_vars_ - 1;
      while (v >= 0) {
        if (++e[static_cast<std::size_t>(v)] <
            src.bounds_[static_cast<std::size_t>(v)])
          break;
        e[static_cast<std::size_t>(v)] = 0;
        --v;
      }
      if (v < 0) break;
    }
  };
  accumulate(*this, Complex(1.0, 0.0));
  accumulate(o, Complex(-1.0, 0.0));
  return out;
}

}  // namespace qetkit
