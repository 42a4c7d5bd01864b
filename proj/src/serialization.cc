// Copyright 2026 The zvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zvlab/serialization.h"

#include <fstream>
#include <sstream>

#include "zvlab/errors.h"

namespace zvlab {
namespace {

using nlohmann::json;

const json& field(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where + ": expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

const json& array_of(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  if (v.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " +
                     std::to_string(v.size()));
  }
  return v;
}

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

json pauli_sum_to_json(const PauliSum& h) {
  json terms = json::array();
  for (const auto& t : h.terms()) {
    terms.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}}, {"string", t.string.to_string()}});
  }
  return {{"n_qubits", h.n_qubits()}, {"ordering", kPauliOrdering}, {"terms", std::move(terms)}};
}

PauliSum pauli_sum_from_json(const json& doc) {
  const json& n_field = field(doc, "n_qubits", "$");
  if (!n_field.is_number_integer()) throw ParseError("$.n_qubits: expected an integer");
  const int n = n_field.get<int>();
  if (const auto it = doc.find("ordering"); it != doc.end() && *it != kPauliOrdering) {
    throw ParseError("$.ordering: unsupported qubit ordering");
  }
  const json& terms = field(doc, "terms", "$");
  if (!terms.is_array()) throw ParseError("$.terms: expected an array");
  std::vector<PauliTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = at("$.terms", i);
    const json& c = array_of(field(terms[i], "coeff", where), 2, where + ".coeff");
    const json& s = field(terms[i], "string", where);
    if (!s.is_string()) throw ParseError(where + ".string: expected a string");
    const auto text = s.get<std::string>();
    if (static_cast<int>(text.size()) != n) {
      throw ParseError(where + ".string: length " + std::to_string(text.size()) +
                       " does not match n_qubits " + std::to_string(n));
    }
    PauliString p;
    try {
      p = PauliString::parse(text);
    } catch (const ParseError& e) {
      throw ParseError(where + ".string: " + e.what());
    }
    out.push_back({cplx(number(c[0], where + ".coeff[0]"), number(c[1], where + ".coeff[1]")), p});
  }
  return PauliSum(n, std::move(out));
}

FermionHamiltonian fermion_from_json(const json& doc) {
  const json& n_field = field(doc, "n_modes", "$");
  if (!n_field.is_number_integer() || n_field.get<int>() < 1) {
    throw ParseError("$.n_modes: expected a positive integer");
  }
  const int n = n_field.get<int>();
  const auto un = static_cast<std::size_t>(n);
  FermionHamiltonian h(n);
  const json& one = array_of(field(doc, "one_body", "$"), un, "$.one_body");
  for (std::size_t p = 0; p < un; ++p) {
    const json& row = array_of(one[p], un, at("$.one_body", p));
    for (std::size_t q = 0; q < un; ++q) {
      h.t(static_cast<int>(p), static_cast<int>(q)) = number(row[q], at(at("$.one_body", p), q));
    }
  }
  if (const auto it = doc.find("two_body"); it != doc.end()) {
    const json& two = array_of(*it, un, "$.two_body");
    for (std::size_t p = 0; p < un; ++p) {
      const std::string wp = at("$.two_body", p);
      const json& a = array_of(two[p], un, wp);
      for (std::size_t q = 0; q < un; ++q) {
        const std::string wq = at(wp, q);
        const json& b = array_of(a[q], un, wq);
        for (std::size_t r = 0; r < un; ++r) {
          const std::string wr = at(wq, r);
          const json& c = array_of(b[r], un, wr);
          for (std::size_t s = 0; s < un; ++s) {
            h.u(static_cast<int>(p), static_cast<int>(q), static_cast<int>(r), static_cast<int>(s)) =
                number(c[s], at(wr, s));
          }
        }
      }
    }
  }
  try {
    h.validate();
  } catch (const DimensionError& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  return h;
}

json fermion_to_json(const FermionHamiltonian& h) {
  const int n = h.n_modes;
  json one = json::array();
  for (int p = 0; p < n; ++p) {
    json row = json::array();
    for (int q = 0; q < n; ++q) row.push_back(h.t(p, q));
    one.push_back(row);
  }
  json two = json::array();
  for (int p = 0; p < n; ++p) {
    json a = json::array();
    for (int q = 0; q < n; ++q) {
      json b = json::array();
      for (int r = 0; r < n; ++r) {
        json c = json::array();
        for (int s = 0; s < n; ++s) c.push_back(h.u(p, q, r, s));
        b.push_back(c);
      }
      a.push_back(b);
    }
    two.push_back(a);
  }
  return {{"n_modes", n}, {"one_body", one}, {"two_body", two}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace zvlab
