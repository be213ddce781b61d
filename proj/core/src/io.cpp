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

#include "qetkit/io.hpp"

#include <fstream>
#include <sstream>

namespace qetkit {

namespace {

Json complex_arrays(const Complex* data, long long count) {
  std::vector<double> re(static_cast<std::size_t>(count));
  std::vector<double> im(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    re[static_cast<std::size_t>(i)] = data[i].real();
    im[static_cast<std::size_t>(i)] = data[i].imag();
  }
  return Json{{"re", re}, {"im", im}};
}

std::vector<Complex> complex_from_arrays(const Json& j, std::size_t expected) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != expected || im.size() != expected)
    throw std::invalid_argument("json: re/im length mismatch");
  std::vector<Complex> out(expected);
  for (std::size_t i = 0; i < expected; ++i)
    out[i] = Complex(re[i].get<double>(), im[i].get<double>());
  return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix_to_json: matrix must be square");
  const long long n = m.rows();
  std::vector<Complex> row_major(static_cast<std::size_t>(n * n));
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c)
      row_major[static_cast<std::size_t>(r * n + c)] = m(r, c);
  Json j = complex_arrays(row_major.data(), n * n);
  j["dim"] = n;
  return j;
}

ComplexMatrix matrix_from_json(const Json& j, bool require_power_of_two) {
  const long long n = j.at("dim").get<long long>();
  if (n < 1) throw std::invalid_argument("matrix json: dim must be positive");
  if (require_power_of_two && !is_power_of_two(n))
    throw std::invalid_argument(
        "matrix json: operator dims must be powers of two");
  const auto data = complex_from_arrays(j, static_cast<std::size_t>(n * n));
  ComplexMatrix m(n, n);
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c)
      m(r, c) = data[static_cast<std::size_t>(r * n + c)];
  return m;
}

Json state_to_json(const StateVector& v) {
  Json j = complex_arrays(v.data(), v.size());
  j["dim"] = v.size();
  return j;
}

StateVector state_from_json(const Json& j) {
  const long long n = j.at("dim").get<long long>();
  if (n < 1) throw std::invalid_argument("state json: dim must be positive");
  const auto data = complex_from_arrays(j, static_cast<std::size_t>(n));
  StateVector v(n);
  for (long long i = 0; i < n; ++i) v(i) = data[static_cast<std::size_t>(i)];
  return v;
}

Json block_encoding_to_json(const BlockEncoding& be) {
  Json j = matrix_to_json(be.unitary);
  j["alpha"] = be.alpha;
  j["ancillas"] = be.ancillas;
  j["epsilon"] = be.epsilon;
  j["system_qubits"] = be.system_qubits;
  j["ledger"] = Json(be.ledger.instances);
  j["ledger_high_water"] = be.ledger.ancilla_high_water;
  return j;
}

BlockEncoding block_encoding_from_json(const Json& j) {
  BlockEncoding be;
  be.unitary = matrix_from_json(j);
  be.alpha = j.at("alpha").get<double>();
  be.ancillas = j.at("ancillas").get<int>();
  be.epsilon = j.at("epsilon").get<double>();
  be.system_qubits = j.at("system_qubits").get<int>();
  if (j.contains("ledger"))
    for (const auto& [name, count] : j.at("ledger").items())
      be.ledger.instances[name] = count.get<long long>();
  be.ledger.ancilla_high_water =
      j.value("ledger_high_water", be.ancillas);
  return be;
}

Json poly1_to_json(const Poly1& p) {
  Json j = complex_arrays(p.coefficients().data(),
                          static_cast<long long>(p.coefficients().size()));
  j["basis"] = "monomial";
  return j;
}

Json cheb_series_to_json(const ChebSeries1& s) {
  Json j = complex_arrays(s.coefficients.data(),
                          static_cast<long long>(s.coefficients.size()));
  j["basis"] = "chebyshev";
  return j;
}

Poly1 poly1_from_json(const Json& j) {
  const std::string basis = j.at("basis").get<std::string>();
  const std::size_t count = j.at("re").size();
  const auto data = complex_from_arrays(j, count);
  if (basis == "monomial") return Poly1(data);
  if (basis == "chebyshev") {
    ChebSeries1 s;
    s.coefficients = data;
    return s.to_poly();
  }
  throw std::invalid_argument("poly json: unknown basis '" + basis + "'");
}

Json polymv_to_json(const PolyMV& p) {
  Json j = complex_arrays(p.coefficients().data(),
                          static_cast<long long>(p.coefficients().size()));
  j["num_vars"] = p.num_vars();
  j["degree_bounds"] = p.degree_bounds();
  return j;
}

PolyMV polymv_from_json(const Json& j) {
  const int d = j.at("num_vars").get<int>();
  std::vector<int> bounds = j.at("degree_bounds").get<std::vector<int>>();
  PolyMV p(d, bounds);
  p.coefficients() = complex_from_arrays(j, p.coefficients().size());
  return p;
}

Json decomposition_to_json(const ProductDecomposition& dec) {
  Json list = Json::array();
  for (const auto& term : dec.terms)
    list.push_back(Json{{"s", term.s},
                        {"Q", poly1_to_json(term.q)},
                        {"beta", term.beta}});
  return list;
}

ProductDecomposition decomposition_from_json(const Json& j) {
  ProductDecomposition dec;
  int max_index = 0;
  for (const auto& entry : j) {
    DecompositionTerm term;
    term.s = entry.at("s").get<std::vector<int>>();
    term.q = poly1_from_json(entry.at("Q"));
    term.beta = entry.at("beta").get<double>();
    for (int s : term.s) max_index = std::max(max_index, s);
    max_index = std::max(max_index, term.q.degree());
    dec.terms.push_back(std::move(term));
  }
  dec.chebyshev_vars =
      dec.terms.empty() ? 0 : static_cast<int>(dec.terms.front().s.size());
  dec.degree_bound = max_index + 1;
  dec.normalized = false;
  return dec;
}

std::string decomposition_to_csv(const ProductDecomposition& dec) {
  std::ostringstream out;
  out.precision(17);
  for (int k = 0; k < dec.chebyshev_vars; ++k) out << "s" << k << ",";
  out << "beta\n";
  for (const auto& term : dec.terms) {
    for (int s : term.s) out << s << ",";
    out << term.beta << "\n";
  }
  return out.str();
}

Json cost_report_to_json(const CostReport& report) {
  Json j;
  j["instances"] = Json(report.oracle_instances);
  j["ancillas"] = report.ancillas_used;
  j["subnorm"] = report.subnormalization;
  j["eps_claimed"] = report.epsilon_claimed;
  j["eps_measured"] = report.epsilon_measured;
  j["instance_total"] = report.instance_total;
  j["instance_bound"] = report.instance_bound;
  j["notes"] = Json(report.notes);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

}  // namespace qetkit
