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

#include <json.hpp>

#include "qetkit/block_encoding.hpp"
#include "qetkit/decomposition.hpp"
#include "qetkit/ntca.hpp"
#include "qetkit/qet.hpp"

namespace qetkit {

using Json = nlohmann::json;

// Matrix / state: {"dim": N, "re": [N*N row-major], "im": [...]}.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, bool require_power_of_two = true);
Json state_to_json(const StateVector& v);
StateVector state_from_json(const Json& j);

// Block encoding: the matrix fields plus alpha/ancillas/epsilon/
// system_qubits/ledger.
Json block_encoding_to_json(const BlockEncoding& be);
BlockEncoding block_encoding_from_json(const Json& j);

// Polynomials: {"basis": "monomial"|"chebyshev", "re": [...], "im": [...]}.
// Chebyshev-basis input is converted to the monomial basis on read.
Json poly1_to_json(const Poly1& p);
Json cheb_series_to_json(const ChebSeries1& s);
Poly1 poly1_from_json(const Json& j);

// {"num_vars": d, "degree_bounds": [...], "re": [...], "im": [...]},
// row-major, last variable fastest.
Json polymv_to_json(const PolyMV& p);
PolyMV polymv_from_json(const Json& j);

// Decomposition: a list of {"s": [...], "Q": poly JSON, "beta": float};
// plus a CSV rendering of (s, beta_s).
Json decomposition_to_json(const ProductDecomposition& dec);
ProductDecomposition decomposition_from_json(const Json& j);
std::string decomposition_to_csv(const ProductDecomposition& dec);

Json cost_report_to_json(const CostReport& report);

// File helpers.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qetkit
