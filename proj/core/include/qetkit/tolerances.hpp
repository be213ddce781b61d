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

#include <string>
#include <vector>

namespace qetkit {

/// Every numeric threshold used by the toolkit, in one record. Tests pin
/// these exact defaults; the CLI can override single entries via
/// --tol NAME=VAL.
struct Tolerances {
  double unitarity = 1e-10;             // ||U'U - I|| for unitary-tagged inputs
  double state_norm = 1e-10;            // | ||v|| - 1 | for normalized states
  double normality = 1e-8;              // ||MM' - M'M|| precondition
  double hermiticity = 1e-8;            // ||M - M'||
  double commutation = 1e-8;            // ||[A,B]|| for Hermitian families
  double simultaneous_residual = 1e-7;  // ||A - V diag V'|| in the shared basis
  double block_commutation = 1e-7;      // commutators of extracted blocks
  double near_normal_block = 1e-6;      // normality of extracted block (split)
  double dilation_norm_slack = 1e-12;   // ||A/alpha|| <= 1 + slack
  double dilation_unitarity = 1e-9;     // unitarity defect of dilations
  double zero_probability = 1e-14;      // postselection cutoff
  double poly_sup_slack = 1e-9;         // ||p||_inf <= 1 + slack before QSP
  double spectrum_slack = 1e-9;         // eigenvalues within [-1-s, 1+s]
  double node_min_gap = 1e-10;          // duplicate-node cutoff for Lagrange
  double zero_term_drop = 1e-12;        // relative cutoff for vanishing Q_s

  /// Overrides a field by name; returns false for unknown names.
  bool set(const std::string& name, double value);

  /// Names accepted by set(), for CLI help and validation.
  static std::vector<std::string> names();
};

}  // namespace qetkit
