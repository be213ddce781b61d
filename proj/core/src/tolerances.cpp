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

#include "qetkit/tolerances.hpp"

#include <map>

namespace qetkit {

namespace {

std::map<std::string, double Tolerances::*> field_map() {
  return {
      {"unitarity", &Tolerances::unitarity},
      {"state_norm", &Tolerances::state_norm},
      {"normality", &Tolerances::normality},
      {"hermiticity", &Tolerances::hermiticity},
      {"commutation", &Tolerances::commutation},
      {"simultaneous_residual", &Tolerances::simultaneous_residual},
      {"block_commutation", &Tolerances::block_commutation},
      {"near_normal_block", &Tolerances::near_normal_block},
      {"dilation_norm_slack", &Tolerances::dilation_norm_slack},
      {"dilation_unitarity", &Tolerances::dilation_unitarity},
      {"zero_probability", &Tolerances::zero_probability},
      {"poly_sup_slack", &Tolerances::poly_sup_slack},
      {"spectrum_slack", &Tolerances::spectrum_slack},
      {"node_min_gap", &Tolerances::node_min_gap},
      {"zero_term_drop", &Tolerances::zero_term_drop},
  };
}

}  // namespace

bool Tolerances::set(const std::string& name, double value) {
  auto fields = field_map();
  auto it = fields.find(name);
  if (it == fields.end()) return false;
  this->*(it->second) = value;
  return true;
}

std::vector<std::string> Tolerances::names() {
  std::vector<std::string> out;
  for (const auto& [name, ptr] : field_map()) out.push_back(name);
  return out;
}

}  // namespace qetkit
