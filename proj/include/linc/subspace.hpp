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

#include <stdexcept>
#include <string>
#include <vector>

#include "linc/matrix.hpp"

namespace linc {

// Linear subspace of K^n in canonical form: the basis is the RREF of any
// spanning set, so two subspaces are equal iff their stored bases are equal
// entrywise. Projective language: a k-dimensional linear subspace is a
// (k-1)-dimensional projective subspace; lines in P(K^n) have vec_dim 2.
template <exact_field K>
class ProjSubspace {
 public:
  // Rows span the subspace; zero rows are allowed and dropped.
  static ProjSubspace from_spanning(const Matrix<K>& rows, const K& exemplar) {
    auto ech = rref(rows);
    Matrix<K> basis(ech.rank, rows.cols(), exemplar.zero());
    for (int i = 0; i < ech.rank; ++i) {
      for (int j = 0; j < rows.cols(); ++j) basis(i, j) = ech.reduced(i, j);
    }
    return ProjSubspace(std::move(basis));
  }

  static ProjSubspace from_vectors(const std::vector<std::vector<K>>& vecs,
                                   int ambient, const K& exemplar) {
    Matrix<K> rows(static_cast<int>(vecs.size()), ambient, exemplar.zero());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (static_cast<int>(vecs[i].size()) != ambient) {
        throw std::invalid_argument("vector length does not match ambient dimension");
      }
      for (int j = 0; j < ambient; ++j) rows(static_cast<int>(i), j) = vecs[i][j];
    }
    return from_spanning(rows, exemplar);
  }

  int ambient_dim() const { return basis_.cols(); }
  int vec_dim() const { return basis_.rows(); }
  int proj_dim() const { return basis_.rows() - 1; }

  const Matrix<K>& basis() const { return basis_; }

  std::vector<K> basis_row(int i) const {
    std::vector<K> v;
    v.reserve(basis_.cols());
    for (int j = 0; j < basis_.cols(); ++j) v.push_back(basis_(i, j));
    return v;
  }

  bool contains(const std::vector<K>& v, const K& exemplar) const {
    if (static_cast<int>(v.size()) != ambient_dim()) {
      throw std::invalid_argument("vector length does not match ambient dimension");
    }
    Matrix<K> stacked(vec_dim() + 1, ambient_dim(), exemplar.zero());
    for (int i = 0; i < vec_dim(); ++i) {
      for (int j = 0; j < ambient_dim(); ++j) stacked(i, j) = basis_(i, j);
    }
    for (int j = 0; j < ambient_dim(); ++j) stacked(vec_dim(), j) = v[j];
    return rank_of(stacked) == vec_dim();
  }

  bool operator==(const ProjSubspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const ProjSubspace& o) const { return !(*this == o); }

  // Canonical text key (used for deterministic ordering of line sets).
  std::string key() const {
    std::string s;
    for (int i = 0; i < basis_.rows(); ++i) {
      for (int j = 0; j < basis_.cols(); ++j) {
        s += basis_(i, j).str();
        s += ',';
      }
      s += ';';
    }
    return s;
  }

 private:
  explicit ProjSubspace(Matrix<K> basis) : basis_(std::move(basis)) {}
  Matrix<K> basis_;
};

// Smallest subspace containing all the given ones.
template <exact_field K>
ProjSubspace<K> join(const std::vector<ProjSubspace<K>>& spaces, const K& exemplar) {
  if (spaces.empty()) throw std::invalid_argument("join of no subspaces");
  int ambient = spaces[0].ambient_dim();
  int total = 0;
  for (const auto& s : spaces) {
    if (s.ambient_dim() != ambient) throw std::invalid_argument("mixed ambient dimensions");
    total += s.vec_dim();
  }
  Matrix<K> rows(total, ambient, exemplar.zero());
  int r = 0;
  for (const auto& s : spaces) {
    for (int i = 0; i < s.vec_dim(); ++i, ++r) {
      for (int j = 0; j < ambient; ++j) rows(r, j) = s.basis()(i, j);
    }
  }
  return ProjSubspace<K>::from_spanning(rows, exemplar);
}

}  // namespace linc
