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

#include <random>
#include <vector>

#include "qetkit/matrices.hpp"
#include "qetkit/polymv.hpp"

namespace qetkit {

// Seed-deterministic fixture generators shared by the CLI and the test
// suites. All randomness flows through the caller's engine.

ComplexMatrix random_complex_matrix(int dim, std::mt19937_64& rng);

/// Haar-like unitary via QR with phase fixing.
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

/// U diag(lambda) U' with eigenvalues uniform in the closed unit disk.
ComplexMatrix random_normal_matrix(int dim, std::mt19937_64& rng);

/// V diag(d) V' with real diagonals uniform in [-1,1]; one shared V.
std::vector<ComplexMatrix> random_commuting_hermitians(int dim, int count,
                                                       std::mt19937_64& rng);

/// Random matrix rescaled to operator norm <= 1.
ComplexMatrix random_contraction(int dim, std::mt19937_64& rng);

StateVector random_state(int dim, std::mt19937_64& rng);

/// Dense random coefficients, degree < degree_bound in every variable.
PolyMV random_polymv(int num_vars, int degree_bound, std::mt19937_64& rng);

/// Same, rescaled so the estimated sup norm on the hypercube is 1.
PolyMV random_unit_sup_polymv(int num_vars, int degree_bound,
                              std::mt19937_64& rng);

}  // namespace qetkit
