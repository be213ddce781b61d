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

#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "qetkit/polymv.hpp"

namespace qetkit {

/// A function on [-1,1]^arity given as an evaluation blackbox, with
/// optional declared smoothness (order k, derivative bound M_k) and an
/// optional boundedness pair (gamma, k) for functions supplied on the
/// whole hypercube.
struct FunctionSpec {
  int arity = 1;
  std::function<Complex(std::span<const double>)> eval;
  std::optional<int> smoothness_order;       // k
  std::optional<double> derivative_bound;    // M_k
  std::optional<std::pair<double, int>> extensibility;  // (gamma, k)
};

/// Tensor-grid interpolation at Chebyshev points: degrees[l] nodes in
/// variable l, so the result has degree < degrees[l] per variable. The
/// coefficient tensor is assembled from expanded Lagrange bases.
PolyMV tensor_interpolate(const FunctionSpec& f, std::span<const int> degrees);

/// (pi/2)^k M_k / k! * n1 log2(n2) / binom(n2+1, k).
double jackson_bound_2d(int k, double m_k, int n1, int n2);

/// d-dimensional version: (pi/2)^k M_k / k! *
/// sum_{l=2..d} [log2(n_l) / binom(n_l+1, k)] * prod_{j<l} n_j.
double jackson_bound_dd(int k, double m_k, std::span<const int> degrees);

/// Grid estimate of the modulus of continuity w(f, [-1,1], delta) over a
/// 10^4-point grid. A lower estimate of the true supremum.
double modulus_of_continuity(const FunctionSpec& f, double delta);

/// Max |p| over the tensor Chebyshev-extrema (Lobatto) grid, endpoints
/// included, followed by coordinatewise local refinement. Never exceeds
/// the true supremum. Requires grid_per_axis >= 4 * max degree.
double sup_norm_estimate(const PolyMV& p, int grid_per_axis);

/// Same, with the smallest admissible grid chosen automatically.
double sup_norm_estimate(const PolyMV& p);

}  // namespace qetkit
