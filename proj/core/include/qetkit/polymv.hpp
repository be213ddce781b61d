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

#include "qetkit/chebyshev.hpp"
#include "qetkit/matrices.hpp"

namespace qetkit {

/// Multivariate polynomial stored as a dense coefficient tensor indexed by
/// exponent vectors. Row-major layout, last variable fastest, matching the
/// on-disk JSON format.
class PolyMV {
 public:
  PolyMV(int num_vars, std::vector<int> degree_bounds);

  static PolyMV from_poly1(const Poly1& p);

  int num_vars() const { return num_vars_; }
  const std::vector<int>& degree_bounds() const { return bounds_; }
  int max_degree() const;

  const std::vector<Complex>& coefficients() const { return c_; }
  std::vector<Complex>& coefficients() { return c_; }

  std::size_t flat_index(std::span<const int> exponents) const;
  Complex at(std::span<const int> exponents) const;
  void set(std::span<const int> exponents, Complex value);

  Complex operator()(std::span<const double> x) const;

  PolyMV operator*(Complex scale) const;
  PolyMV operator-(const PolyMV& o) const;  // bounds are widened as needed

 private:
  int num_vars_;
  std::vector<int> bounds_;  // tensor extent per variable (max degree + 1)
  std::vector<Complex> c_;
};

}  // namespace qetkit
