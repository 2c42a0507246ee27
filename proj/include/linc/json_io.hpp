/*
 * Copyright 2026 The linc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linc/binary_form.hpp"
#include "linc/fields.hpp"
#include "linc/matrix.hpp"
#include "linc/odd_fibers.hpp"
#include "linc/pencil.hpp"
#include "linc/subspace.hpp"

namespace linc {

using json = nlohmann::json;

// All numeric payloads are serialized as strings: exact values cross the
// JSON boundary without rounding. Rationals are "a/b" in lowest terms
// ("a" is accepted on input); Fp values are plain decimal strings, the
// modulus living in the document's field tag.

template <exact_field K>
std::string field_tag(const K& exemplar);

template <>
inline std::string field_tag<Rational>(const Rational&) {
  return "Q";
}

template <>
inline std::string field_tag<Fp>(const Fp& exemplar) {
  return "Fp:" + std::to_string(exemplar.modulus());
}

struct FieldSpec {
  bool is_q = true;
  std::uint64_t p = 0;

  static FieldSpec parse(const std::string& tag) {
    if (tag == "Q") return FieldSpec{true, 0};
    if (tag.rfind("Fp:", 0) == 0) {
      std::string num = tag.substr(3);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad field tag: " + tag);
      }
      std::uint64_t p = std::stoull(num);
      if (p >= (1ULL << 63) || !is_prime_u64(p)) {
        throw std::invalid_argument("modulus is not a word-size prime");
      }
      return FieldSpec{false, p};
    }
    throw std::invalid_argument("bad field tag: " + tag);
  }
};

template <exact_field K>
std::string scalar_to_string(const K& x);

template <>
inline std::string scalar_to_string<Rational>(const Rational& x) {
  return x.str();
}

template <>
inline std::string scalar_to_string<Fp>(const Fp& x) {
  return std::to_string(x.value());
}

template <exact_field K>
K scalar_from_string(const std::string& s, const K& exemplar);

template <>
inline Rational scalar_from_string<Rational>(const std::string& s, const Rational&) {
  return Rational::parse(s);
}

template <>
inline Fp scalar_from_string<Fp>(const std::string& s, const Fp& exemplar) {
  if (exemplar.modulus() == 0) throw std::logic_error("Fp parsing needs a bound exemplar");
  bool neg = !s.empty() && s[0] == '-';
  std::string digits = neg ? s.substr(1) : s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad field element literal: " + s);
  }
  // Reduce digit by digit so arbitrarily long literals stay exact.
  std::uint64_t p = exemplar.modulus();
  Fp acc(0, p);
  Fp ten(10 % p, p);
  for (char ch : digits) {
    acc = acc * ten + Fp(static_cast<std::uint64_t>(ch - '0') % p, p);
  }
  return neg ? -acc : acc;
}

template <exact_field K>
K scalar_from_json(const json& j, const K& exemplar) {
  if (!j.is_string()) throw std::invalid_argument("expected a string-encoded scalar");
  return scalar_from_string<K>(j.get<std::string>(), exemplar);
}

// --- matrices ---------------------------------------------------------------

template <exact_field K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string<K>(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <exact_field K>
Matrix<K> matrix_from_json(const json& j, const K& exemplar) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array()) throw std::invalid_argument("matrix rows must be arrays");
  const int cols = static_cast<int>(j[0].size());
  Matrix<K> m(rows, cols, exemplar.zero());
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(j[i][c], exemplar);
  }
  return m;
}

template <exact_field K>
json skew_to_json(const SkewMatrix<K>& a) {
  return matrix_to_json(a.matrix());
}

template <exact_field K>
SkewMatrix<K> skew_from_json(const json& j, const K& exemplar) {
  return SkewMatrix<K>::from_matrix(matrix_from_json<K>(j, exemplar));
}

// --- pencils ----------------------------------------------------------------

template <exact_field K>
json pencil_to_json(const SkewPencil<K>& p, const K& exemplar) {
  json j;
  j["n"] = std::to_string(p.size());
  j["field"] = field_tag<K>(exemplar);
  j["N0"] = skew_to_json(p.n0);
  j["N1"] = skew_to_json(p.n1);
  return j;
}

inline int int_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(std::string("bad integer for ") + what);
    }
    return std::stoi(s);
  }
  throw std::invalid_argument(std::string("bad integer for ") + what);
}

template <exact_field K>
SkewPencil<K> pencil_from_json(const json& j, const K& exemplar) {
  if (!j.contains("N0") || !j.contains("N1")) {
    throw std::invalid_argument("pencil JSON needs N0 and N1");
  }
  SkewMatrix<K> n0 = skew_from_json<K>(j["N0"], exemplar);
  SkewMatrix<K> n1 = skew_from_json<K>(j["N1"], exemplar);
  if (j.contains("n") && int_from_json(j["n"], "n") != n0.size()) {
    throw std::invalid_argument("declared n does not match matrix size");
  }
  return SkewPencil<K>(std::move(n0), std::move(n1));
}

// --- forms ------------------------------------------------------------------

template <exact_field K>
json form_to_json(const BinaryForm<K>& f) {
  json j;
  j["degree"] = std::to_string(f.degree());
  json coeffs = json::array();
  for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(scalar_to_string<K>(f[i]));
  j["coeffs"] = std::move(coeffs);
  return j;
}

template <exact_field K>
BinaryForm<K> form_from_json(const json& j, const K& exemplar) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() ||
      j["coeffs"].empty()) {
    throw std::invalid_argument("form JSON needs a nonempty coeffs array");
  }
  std::vector<K> c;
  c.reserve(j["coeffs"].size());
  for (const auto& e : j["coeffs"]) c.push_back(scalar_from_json<K>(e, exemplar));
  BinaryForm<K> f(std::move(c));
  if (j.contains("degree") && int_from_json(j["degree"], "degree") != f.degree()) {
    throw std::invalid_argument("declared degree does not match coefficients");
  }
  return f;
}

template <exact_field K>
json forms_to_json(const std::vector<BinaryForm<K>>& forms) {
  json arr = json::array();
  for (const auto& f : forms) arr.push_back(form_to_json(f));
  return arr;
}

template <exact_field K>
std::vector<BinaryForm<K>> forms_from_json(const json& j, const K& exemplar) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("forms must be a nonempty array");
  std::vector<BinaryForm<K>> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(form_from_json<K>(e, exemplar));
  return out;
}

// --- points, subspaces, loci --------------------------------------------------

template <exact_field K>
json point_to_json(const PointP1<K>& p) {
  return json::array({scalar_to_string<K>(p.c0()), scalar_to_string<K>(p.c1())});
}

template <exact_field K>
json subspace_to_json(const ProjSubspace<K>& s) {
  return matrix_to_json(s.basis());
}

template <exact_field K>
ProjSubspace<K> subspace_from_json(const json& j, const K& exemplar) {
  Matrix<K> rows = matrix_from_json<K>(j, exemplar);
  return ProjSubspace<K>::from_spanning(rows, exemplar);
}

template <exact_field K>
json lines_to_json(const std::vector<ProjSubspace<K>>& lines, const K& exemplar) {
  json j;
  if (!lines.empty()) {
    j["n"] = std::to_string(lines[0].ambient_dim());
    j["field"] = field_tag<K>(exemplar);
  }
  json arr = json::array();
  for (const auto& l : lines) arr.push_back(subspace_to_json(l));
  j["lines"] = std::move(arr);
  return j;
}

template <exact_field K>
std::vector<ProjSubspace<K>> lines_from_json(const json& j, const K& exemplar) {
  const json& arr = j.is_array() ? j : j.at("lines");
  if (!arr.is_array() || arr.empty()) throw std::invalid_argument("lines must be a nonempty array");
  std::vector<ProjSubspace<K>> out;
  out.reserve(arr.size());
  for (const auto& e : arr) out.push_back(subspace_from_json<K>(e, exemplar));
  return out;
}

template <exact_field K>
json deg_locus_even_to_json(const DegLocusEven<K>& l) {
  json items = json::array();
  for (const auto& it : l.items) {
    json e;
    e["point"] = point_to_json(it.point);
    e["line"] = subspace_to_json(it.line);
    items.push_back(std::move(e));
  }
  json j;
  j["items"] = std::move(items);
  return j;
}

template <exact_field K>
json deg_locus_odd_to_json(const DegLocusOdd<K>& l) {
  json j;
  j["forms"] = forms_to_json(l.forms);
  return j;
}

}  // namespace linc
