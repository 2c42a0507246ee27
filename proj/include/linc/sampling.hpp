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

#include <vector>

#include "linc/complexes.hpp"
#include "linc/errors.hpp"
#include "linc/matrix.hpp"
#include "linc/odd_fibers.hpp"
#include "linc/pencil.hpp"
#include "linc/rng.hpp"
#include "linc/subspace.hpp"

namespace linc {

// All random draws in this library are small integers embedded in the
// field, so instances stay exact and human-auditable.
template <exact_field K>
K random_scalar(Rng& rng, const K& exemplar) {
  return exemplar.from_int(rng.uniform_int(-10, 10));
}

template <exact_field K>
SkewMatrix<K> random_skew(int n, Rng& rng, const K& exemplar) {
  std::vector<K> u;
  u.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int k = 0; k < n * (n - 1) / 2; ++k) u.push_back(random_scalar(rng, exemplar));
  return SkewMatrix<K>::from_upper(n, u, exemplar.zero());
}

template <exact_field K>
SkewPencil<K> random_pencil(int n, Rng& rng, const K& exemplar) {
  SkewMatrix<K> a = random_skew(n, rng, exemplar);
  SkewMatrix<K> b = random_skew(n, rng, exemplar);
  return SkewPencil<K>(std::move(a), std::move(b));
}

template <exact_field K>
Matrix<K> random_matrix(int rows, int cols, Rng& rng, const K& exemplar) {
  Matrix<K> m(rows, cols, exemplar.zero());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, exemplar);
  }
  return m;
}

template <exact_field K>
Matrix<K> random_invertible(int n, Rng& rng, const K& exemplar) {
  constexpr int kRetries = 32;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Matrix<K> m = random_matrix(n, n, rng, exemplar);
    if (inverse(m).has_value()) return m;
  }
  throw genericity_error(genericity::no_generic_element, "no generic element found");
}

template <exact_field K>
ProjSubspace<K> random_line(int n, Rng& rng, const K& exemplar) {
  constexpr int kRetries = 32;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Matrix<K> rows = random_matrix(2, n, rng, exemplar);
    ProjSubspace<K> s = ProjSubspace<K>::from_spanning(rows, exemplar);
    if (s.vec_dim() == 2) return s;
  }
  throw genericity_error(genericity::no_generic_element, "no generic element found");
}

// A spanning configuration of n/2 pairwise skew lines: the image of the
// standard configuration under a random invertible matrix, which spans by
// construction.
template <exact_field K>
std::vector<ProjSubspace<K>> random_spanning_lines(int n, Rng& rng, const K& exemplar) {
  Matrix<K> g = random_invertible(n, rng, exemplar);
  std::vector<ProjSubspace<K>> lines;
  lines.reserve(n / 2);
  for (int i = 0; i < n / 2; ++i) {
    std::vector<K> u(n, exemplar.zero()), v(n, exemplar.zero());
    for (int r = 0; r < n; ++r) {
      u[r] = g(r, 2 * i);
      v[r] = g(r, 2 * i + 1);
    }
    lines.push_back(ProjSubspace<K>::from_vectors({u, v}, n, exemplar));
  }
  return lines;
}

template <exact_field K>
BinaryForm<K> random_form(int degree, Rng& rng, const K& exemplar) {
  std::vector<K> c;
  c.reserve(degree + 1);
  for (int i = 0; i <= degree; ++i) c.push_back(random_scalar(rng, exemplar));
  return BinaryForm<K>(std::move(c));
}

// n random forms of degree (n-1)/2 whose coefficient matrix has full rank.
template <exact_field K>
FormVector<K> random_spanning_forms(int n, Rng& rng, const K& exemplar) {
  constexpr int kRetries = 64;
  const int m = (n - 1) / 2;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<BinaryForm<K>> forms;
    forms.reserve(n);
    for (int i = 0; i < n; ++i) forms.push_back(random_form(m, rng, exemplar));
    FormVector<K> f(std::move(forms));
    if (f.spanning()) return f;
  }
  throw genericity_error(genericity::no_generic_element, "no generic element found");
}

}  // namespace linc
