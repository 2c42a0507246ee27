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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linc/fields.hpp"

namespace linc {

// Dense matrix over an exact scalar type. Indices are 0-based in code;
// diagnostics use 1-based positions. Kept deliberately small: this library
// needs exact row reduction with deterministic pivoting, not a BLAS.
template <typename T>
class Matrix {
 public:
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  Matrix(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    if (e_.size() != static_cast<std::size_t>(rows) * cols) {
      throw std::invalid_argument("entry count does not match dimensions");
    }
  }

  static Matrix identity(int n, const T& exemplar) {
    Matrix m(n, n, exemplar.zero());
    for (int i = 0; i < n; ++i) m(i, i) = exemplar.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  Matrix transpose() const {
    std::vector<T> te;
    te.reserve(e_.size());
    for (int j = 0; j < cols_; ++j) {
      for (int i = 0; i < rows_; ++i) te.push_back((*this)(i, j));
    }
    return Matrix(cols_, rows_, std::move(te));
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    if (rows_ == 0 || o.cols_ == 0 || cols_ == 0) {
      throw std::invalid_argument("product requires nonempty matrices");
    }
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(rows_) * o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < o.cols_; ++j) {
        T acc = (*this)(i, 0) * o(0, j);
        for (int k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
        out.push_back(std::move(acc));
      }
    }
    return Matrix(rows_, o.cols_, std::move(out));
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_ || cols_ == 0) {
      throw std::invalid_argument("dimension mismatch in apply");
    }
    std::vector<T> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
      T acc = (*this)(i, 0) * v[0];
      for (int k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * v[k];
      out.push_back(std::move(acc));
    }
    return out;
  }

  Matrix row_submatrix(const std::vector<int>& rows) const {
    std::vector<T> out;
    out.reserve(rows.size() * cols_);
    for (int r : rows) {
      for (int j = 0; j < cols_; ++j) out.push_back((*this)(r, j));
    }
    return Matrix(static_cast<int>(rows.size()), cols_, std::move(out));
  }

 private:
  int rows_, cols_;
  std::vector<T> e_;
};

template <exact_field K>
struct EchelonForm {
  Matrix<K> reduced;
  std::vector<int> pivot_cols;  // ascending; size == rank
  int rank;
};

// Reduced row echelon form by Gauss-Jordan elimination. Pivot choice is the
// first nonzero entry in the column, so the result is deterministic and,
// being the RREF, a canonical representative of the row space.
template <exact_field K>
EchelonForm<K> rref(Matrix<K> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    }
    K piv_inv = m(r, c).inv();
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * piv_inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  int rank = static_cast<int>(pivots.size());
  return EchelonForm<K>{std::move(m), std::move(pivots), rank};
}

template <exact_field K>
int rank_of(const Matrix<K>& m) {
  return rref(m).rank;
}

// Basis of the right kernel {x : m x = 0}; one vector per free column,
// derived from the RREF, hence deterministic.
template <exact_field K>
std::vector<std::vector<K>> nullspace(const Matrix<K>& m, const K& exemplar) {
  auto ech = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<K> v(cols, exemplar.zero());
    v[c] = exemplar.one();
    for (int r = 0; r < ech.rank; ++r) {
      v[ech.pivot_cols[r]] = -ech.reduced(r, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <exact_field K>
struct LinearSolution {
  std::vector<K> particular;
  std::vector<std::vector<K>> kernel;
};

// Solves m x = b exactly. Returns nullopt when inconsistent.
template <exact_field K>
std::optional<LinearSolution<K>> solve_linear(const Matrix<K>& m,
                                              const std::vector<K>& b,
                                              const K& exemplar) {
  if (static_cast<int>(b.size()) != m.rows()) {
    throw std::invalid_argument("rhs length does not match row count");
  }
  const int cols = m.cols();
  Matrix<K> aug(m.rows(), cols + 1, exemplar.zero());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  auto ech = rref(std::move(aug));
  for (int c : ech.pivot_cols) {
    if (c == cols) return std::nullopt;  // pivot in the rhs column
  }
  std::vector<K> x(cols, exemplar.zero());
  for (int r = 0; r < ech.rank; ++r) {
    x[ech.pivot_cols[r]] = ech.reduced(r, cols);
  }
  // Columns 0..cols-1 of the reduced augmented matrix form the RREF of m,
  // so the kernel can be read off the same elimination.
  std::vector<bool> is_pivot(cols, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> kernel;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<K> v(cols, exemplar.zero());
    v[c] = exemplar.one();
    for (int r = 0; r < ech.rank; ++r) {
      v[ech.pivot_cols[r]] = -ech.reduced(r, c);
    }
    kernel.push_back(std::move(v));
  }
  return LinearSolution<K>{std::move(x), std::move(kernel)};
}

// Determinant by fraction-producing Gaussian elimination with the first
// nonzero pivot; exact over any field.
template <exact_field K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  K det = m(0, 0).one();
  bool negate = false;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i) {
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return m(0, 0).zero();
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      negate = !negate;
    }
    det = det * m(c, c);
    K piv_inv = m(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      K f = m(i, c) * piv_inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return negate ? -det : det;
}

template <exact_field K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  if (n == 0) throw std::invalid_argument("inverse of empty matrix");
  const K ex = m(0, 0);
  Matrix<K> aug(n, 2 * n, ex.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = ex.one();
  }
  auto ech = rref(std::move(aug));
  // Invertible iff the left block reduced to the identity.
  for (int r = 0; r < n; ++r) {
    if (r >= ech.rank || ech.pivot_cols[r] != r) return std::nullopt;
  }
  Matrix<K> inv(n, n, ex.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Skew-symmetric matrices and Pfaffians.
//
// Entries may be field scalars or any commutative-ring type supporting
// + - * and is_zero() (binary forms are used downstream). The Pfaffian is
// computed by expansion along the smallest surviving index with subset
// memoization; for n x n input the state space is the even-size subsets of
// {0..n-1}, fine for the desk-scale n used here (n <= 12).
// ---------------------------------------------------------------------------

// Index of the entry (i, j), i < j, inside the row-major strict upper
// triangle of an n x n matrix (the packing used by SkewMatrix::from_upper).
inline int upper_index(int n, int i, int j) {
  // offset of row i = sum_{r<i} (n-1-r)
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

template <typename T>
class SkewMatrix {
 public:
  // Validates skew-symmetry entrywise; diagnostics are 1-based.
  static SkewMatrix from_matrix(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
    const int n = m.rows();
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        bool bad = (i == j) ? !m(i, i).is_zero()
                            : !(m(i, j) + m(j, i)).is_zero();
        if (bad) {
          throw std::invalid_argument(
              "matrix not skew-symmetric at (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + ")");
        }
      }
    }
    return SkewMatrix(m);
  }

  // Builds from the strict upper triangle in row-major order
  // (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1).
  static SkewMatrix from_upper(int n, const std::vector<T>& upper, const T& zero) {
    if (static_cast<std::size_t>(n) * (n - 1) / 2 != upper.size()) {
      throw std::invalid_argument("upper triangle size does not match n");
    }
    Matrix<T> m(n, n, zero);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++k) {
        m(i, j) = upper[k];
        m(j, i) = -upper[k];
      }
    }
    return SkewMatrix(m);
  }

  int size() const { return m_.rows(); }
  const Matrix<T>& matrix() const { return m_; }
  const T& operator()(int i, int j) const { return m_(i, j); }

  std::vector<T> upper() const {
    std::vector<T> u;
    const int n = size();
    u.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) u.push_back(m_(i, j));
    }
    return u;
  }

  bool operator==(const SkewMatrix& o) const { return m_ == o.m_; }

 private:
  explicit SkewMatrix(Matrix<T> m) : m_(std::move(m)) {}
  Matrix<T> m_;
};

namespace detail {

// Pfaffian of the principal submatrix indexed by the set bits of `mask`
// (an even number of bits >= 2). Expansion along the smallest index i0:
//   Pf(S) = sum over j in S\{i0} of sign * a(i0,j) * Pf(S\{i0,j}),
// where the sign is +1 for the first j, alternating afterwards. Zero
// entries still contribute a zero term of the correct shape, which matters
// when T is a polynomial type with degrees tracked by value.
template <typename T>
const T& pfaffian_masked(const Matrix<T>& a, std::uint32_t mask,
                         std::map<std::uint32_t, T>& memo) {
  auto hit = memo.find(mask);
  if (hit != memo.end()) return hit->second;

  int i0 = 0;
  while (!(mask & (1u << i0))) ++i0;
  std::uint32_t rest = mask & ~(1u << i0);

  std::optional<T> acc;
  bool positive = true;
  for (int j = i0 + 1; j < 32; ++j) {
    if (!(rest & (1u << j))) continue;
    std::uint32_t sub = rest & ~(1u << j);
    T term = (sub == 0) ? a(i0, j)
                        : a(i0, j) * pfaffian_masked(a, sub, memo);
    if (!positive) term = -term;
    acc = acc.has_value() ? std::move(*acc) + std::move(term) : std::move(term);
    positive = !positive;
  }
  return memo.emplace(mask, std::move(*acc)).first->second;
}

}  // namespace detail

// Pfaffian of an even-size skew matrix; Pf(A)^2 == det(A).
template <typename T>
T pfaffian(const SkewMatrix<T>& a) {
  const int n = a.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian requires even size");
  if (n == 0 || n > 16) throw std::invalid_argument("pfaffian size out of range");
  std::map<std::uint32_t, T> memo;
  std::uint32_t full = (1u << n) - 1;
  return detail::pfaffian_masked(a.matrix(), full, memo);
}

// Signed vector of principal sub-Pfaffians of an odd-size skew matrix:
// p[i] = (-1)^i Pf(A with row/column i removed), 0-based. It satisfies the
// kernel identity A p = 0, so for corank one it spans ker A.
template <typename T>
std::vector<T> subpfaffian_vector(const SkewMatrix<T>& a) {
  const int n = a.size();
  if (n % 2 != 1) throw std::invalid_argument("sub-Pfaffian vector requires odd size");
  if (n < 3 || n > 15) throw std::invalid_argument("sub-Pfaffian size out of range");
  std::map<std::uint32_t, T> memo;
  std::uint32_t full = (1u << n) - 1;
  std::vector<T> p;
  p.reserve(n);
  for (int i = 0; i < n; ++i) {
    T v = detail::pfaffian_masked(a.matrix(), full & ~(1u << i), memo);
    p.push_back(i % 2 == 0 ? std::move(v) : -std::move(v));
  }
  return p;
}

// Congruence transform g A g^T for invertible g.
template <exact_field K>
SkewMatrix<K> congruence(const Matrix<K>& g, const SkewMatrix<K>& a) {
  if (g.rows() != g.cols() || g.rows() != a.size()) {
    throw std::invalid_argument("dimension mismatch in congruence");
  }
  if (!inverse(g).has_value()) {
    throw std::invalid_argument("congruence requires an invertible matrix");
  }
  Matrix<K> prod = g * a.matrix() * g.transpose();
  return SkewMatrix<K>::from_matrix(prod);
}

}  // namespace linc
