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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linc/errors.hpp"
#include "linc/matrix.hpp"
#include "linc/pencil.hpp"
#include "linc/rng.hpp"
#include "linc/subspace.hpp"

namespace linc {

// A linear line complex: a nonzero skew matrix up to scale, held in
// canonical form (first nonzero upper-triangle entry equals 1) so equality
// of values is equality of projective classes.
template <exact_field K>
class Complex {
 public:
  static Complex from_skew(const SkewMatrix<K>& a) {
    std::vector<K> u = a.upper();
    int lead = -1;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (!u[k].is_zero()) {
        lead = static_cast<int>(k);
        break;
      }
    }
    if (lead < 0) throw std::invalid_argument("zero matrix is not a complex");
    K s = u[lead].inv();
    for (auto& x : u) x = x * s;
    return Complex(SkewMatrix<K>::from_upper(a.size(), u, u[lead].zero()));
  }

  static Complex from_coordinates(int n, const std::vector<K>& upper, const K& exemplar) {
    return from_skew(SkewMatrix<K>::from_upper(n, upper, exemplar.zero()));
  }

  int size() const { return rep_.size(); }
  const SkewMatrix<K>& rep() const { return rep_; }

  // Canonical coordinates in the n(n-1)/2-dimensional space of complexes.
  std::vector<K> coordinates() const { return rep_.upper(); }

  bool operator==(const Complex& o) const { return rep_ == o.rep_; }
  bool operator!=(const Complex& o) const { return !(*this == o); }

 private:
  explicit Complex(SkewMatrix<K> rep) : rep_(std::move(rep)) {}
  SkewMatrix<K> rep_;
};

enum class ComplexClass {
  nonspecial,      // n even, corank 0
  special_first,   // n even, corank 2: center is a line
  special_second,  // n even, corank >= 4: center at least a P^3
  general_odd,     // n odd, corank 1: center is a point
  special_odd      // n odd, corank >= 3
};

inline const char* to_string(ComplexClass c) {
  switch (c) {
    case ComplexClass::nonspecial:     return "nonspecial";
    case ComplexClass::special_first:  return "special-first-type";
    case ComplexClass::special_second: return "special-second-type";
    case ComplexClass::general_odd:    return "general";
    case ComplexClass::special_odd:    return "special";
  }
  return "unknown";
}

template <exact_field K>
int corank(const SkewMatrix<K>& a) {
  return a.size() - rank_of(a.matrix());
}

// Classification by corank; skew rank is even, so corank has n's parity.
template <exact_field K>
ComplexClass classify(const Complex<K>& a) {
  int c = corank(a.rep());
  if (a.size() % 2 == 0) {
    if (c == 0) return ComplexClass::nonspecial;
    if (c == 2) return ComplexClass::special_first;
    return ComplexClass::special_second;
  }
  return c == 1 ? ComplexClass::general_odd : ComplexClass::special_odd;
}

// Center of a complex: P(ker A), canonical; empty when A is invertible.
template <exact_field K>
ProjSubspace<K> center(const Complex<K>& a, const K& exemplar) {
  auto kernel = nullspace(a.rep().matrix(), exemplar);
  return ProjSubspace<K>::from_vectors(kernel, a.size(), exemplar);
}

// Linear space of complexes in canonical coordinates: a list of independent
// Complex representatives plus the RREF of their coordinate vectors, which
// is the canonical form used for equality.
template <exact_field K>
class ComplexSpace {
 public:
  // The given complexes must be linearly independent; violations are
  // internal errors in this library's constructions.
  static ComplexSpace span_independent(std::vector<Complex<K>> basis, const K& exemplar) {
    if (basis.empty()) throw std::invalid_argument("empty complex family");
    const int n = basis[0].size();
    const int d = n * (n - 1) / 2;
    Matrix<K> rows(static_cast<int>(basis.size()), d, exemplar.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].size() != n) throw std::invalid_argument("mixed complex sizes");
      std::vector<K> co = basis[i].coordinates();
      for (int j = 0; j < d; ++j) rows(static_cast<int>(i), j) = co[j];
    }
    auto ech = rref(rows);
    if (ech.rank != static_cast<int>(basis.size())) {
      throw std::logic_error("dependent complexes in span_independent");
    }
    Matrix<K> canon(ech.rank, d, exemplar.zero());
    for (int i = 0; i < ech.rank; ++i) {
      for (int j = 0; j < d; ++j) canon(i, j) = ech.reduced(i, j);
    }
    return ComplexSpace(n, std::move(basis), std::move(canon));
  }

  int ambient_matrix_size() const { return n_; }
  int vec_dim() const { return static_cast<int>(basis_.size()); }
  int proj_dim() const { return vec_dim() - 1; }
  const std::vector<Complex<K>>& basis() const { return basis_; }
  const Matrix<K>& canonical() const { return canonical_; }

  bool contains(const Complex<K>& a, const K& exemplar) const {
    std::vector<K> co = a.coordinates();
    Matrix<K> stacked(canonical_.rows() + 1, canonical_.cols(), exemplar.zero());
    for (int i = 0; i < canonical_.rows(); ++i) {
      for (int j = 0; j < canonical_.cols(); ++j) stacked(i, j) = canonical_(i, j);
    }
    for (int j = 0; j < canonical_.cols(); ++j) stacked(canonical_.rows(), j) = co[j];
    return rank_of(stacked) == canonical_.rows();
  }

  bool operator==(const ComplexSpace& o) const {
    return n_ == o.n_ && canonical_ == o.canonical_;
  }
  bool operator!=(const ComplexSpace& o) const { return !(*this == o); }

 private:
  ComplexSpace(int n, std::vector<Complex<K>> basis, Matrix<K> canon)
      : n_(n), basis_(std::move(basis)), canonical_(std::move(canon)) {}

  int n_;
  std::vector<Complex<K>> basis_;
  Matrix<K> canonical_;
};

namespace detail {

// Rows of the linear system "A v = 0 for every v in vecs", in the upper
// triangle coordinates x_(i,j) of the unknown skew matrix A:
// (A v)_r = sum_{c>r} x_(r,c) v_c - sum_{c<r} x_(c,r) v_c.
template <exact_field K>
Matrix<K> kernel_condition_rows(const std::vector<std::vector<K>>& vecs, int n,
                                const K& exemplar) {
  const int d = n * (n - 1) / 2;
  Matrix<K> sys(static_cast<int>(vecs.size()) * n, d, exemplar.zero());
  int row = 0;
  for (const auto& v : vecs) {
    for (int r = 0; r < n; ++r, ++row) {
      for (int c = 0; c < n; ++c) {
        if (c == r) continue;
        int idx = (r < c) ? upper_index(n, r, c) : upper_index(n, c, r);
        K coef = (r < c) ? v[c] : -v[c];
        sys(row, idx) = sys(row, idx) + coef;
      }
    }
  }
  return sys;
}

}  // namespace detail

// All complexes whose center contains the given line: the fiber of the
// Gauss-type assignment "complex -> center" over a line, a linear space of
// projective dimension (n-1)(n-4)/2.
template <exact_field K>
ComplexSpace<K> gauss_fiber(const ProjSubspace<K>& line, const K& exemplar) {
  if (line.vec_dim() != 2) throw std::invalid_argument("not a line");
  const int n = line.ambient_dim();
  std::vector<std::vector<K>> vecs = {line.basis_row(0), line.basis_row(1)};
  Matrix<K> sys = detail::kernel_condition_rows(vecs, n, exemplar);
  auto kernel = nullspace(sys, exemplar);
  std::vector<Complex<K>> basis;
  basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    basis.push_back(Complex<K>::from_coordinates(n, v, exemplar));
  }
  return ComplexSpace<K>::span_independent(std::move(basis), exemplar);
}

// The unique complex (up to scale) whose center is the given subspace of
// projective dimension n-3.
template <exact_field K>
Complex<K> center_complex(const ProjSubspace<K>& s, const K& exemplar) {
  const int n = s.ambient_dim();
  if (s.vec_dim() != n - 2) {
    throw std::invalid_argument("center_complex requires projective dimension n-3");
  }
  std::vector<std::vector<K>> vecs;
  vecs.reserve(s.vec_dim());
  for (int i = 0; i < s.vec_dim(); ++i) vecs.push_back(s.basis_row(i));
  Matrix<K> sys = detail::kernel_condition_rows(vecs, n, exemplar);
  auto kernel = nullspace(sys, exemplar);
  if (kernel.size() != 1) {
    throw std::logic_error("center_complex: solution space dimension != 1");
  }
  return Complex<K>::from_coordinates(n, kernel[0], exemplar);
}

// The n/2 coordinate lines span(e_{2i-1}, e_{2i}), 1-based.
template <exact_field K>
std::vector<ProjSubspace<K>> standard_lines(int n, const K& exemplar) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("standard lines need even n >= 4");
  std::vector<ProjSubspace<K>> lines;
  lines.reserve(n / 2);
  for (int i = 0; i < n / 2; ++i) {
    std::vector<K> u(n, exemplar.zero()), v(n, exemplar.zero());
    u[2 * i] = exemplar.one();
    v[2 * i + 1] = exemplar.one();
    lines.push_back(ProjSubspace<K>::from_vectors({u, v}, n, exemplar));
  }
  return lines;
}

// The sigma construction attached to a spanning configuration of n/2 lines:
// H_j is the unique complex whose center is the span of all lines but the
// j-th; sigma is the span of the H_j (projective dimension (n-2)/2) and
// F_i the span of all H_j, j != i.
template <exact_field K>
struct SigmaFrame {
  std::vector<ProjSubspace<K>> lines;
  std::vector<Complex<K>> h;
  ComplexSpace<K> sigma;
  std::vector<ComplexSpace<K>> f;
};

template <exact_field K>
void require_spanning_lines(const std::vector<ProjSubspace<K>>& lines, const K& exemplar) {
  if (lines.empty()) {
    throw genericity_error(genericity::degenerate_configuration, "degenerate configuration");
  }
  const int n = lines[0].ambient_dim();
  if (n < 4 || n % 2 != 0 || static_cast<int>(lines.size()) != n / 2) {
    throw std::invalid_argument("need n/2 lines in K^n, n even >= 4");
  }
  for (const auto& l : lines) {
    if (l.vec_dim() != 2 || l.ambient_dim() != n) {
      throw std::invalid_argument("not a line");
    }
  }
  if (join(lines, exemplar).vec_dim() != n) {
    throw genericity_error(genericity::degenerate_configuration, "degenerate configuration");
  }
}

template <exact_field K>
SigmaFrame<K> build_sigma(const std::vector<ProjSubspace<K>>& lines, const K& exemplar) {
  require_spanning_lines(lines, exemplar);
  const int m = static_cast<int>(lines.size());
  std::vector<Complex<K>> h;
  h.reserve(m);
  for (int j = 0; j < m; ++j) {
    std::vector<ProjSubspace<K>> others;
    others.reserve(m - 1);
    for (int i = 0; i < m; ++i) {
      if (i != j) others.push_back(lines[i]);
    }
    h.push_back(center_complex(join(others, exemplar), exemplar));
  }
  ComplexSpace<K> sigma = ComplexSpace<K>::span_independent(h, exemplar);
  std::vector<ComplexSpace<K>> f;
  f.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<Complex<K>> sub;
    sub.reserve(m - 1);
    for (int j = 0; j < m; ++j) {
      if (j != i) sub.push_back(h[j]);
    }
    f.push_back(ComplexSpace<K>::span_independent(std::move(sub), exemplar));
  }
  return SigmaFrame<K>{lines, std::move(h), std::move(sigma), std::move(f)};
}

// Invertible matrix sending the standard configuration to the given one:
// columns 2i, 2i+1 are the canonical spanning pair of the i-th line.
// Complexes transport contravariantly along it: A -> g^{-T} A g^{-1}.
template <exact_field K>
Matrix<K> normalizing_projectivity(const std::vector<ProjSubspace<K>>& lines,
                                   const K& exemplar) {
  require_spanning_lines(lines, exemplar);
  const int n = lines[0].ambient_dim();
  Matrix<K> g(n, n, exemplar.zero());
  for (int i = 0; i < n / 2; ++i) {
    std::vector<K> u = lines[i].basis_row(0);
    std::vector<K> v = lines[i].basis_row(1);
    for (int r = 0; r < n; ++r) {
      g(r, 2 * i) = u[r];
      g(r, 2 * i + 1) = v[r];
    }
  }
  return g;
}

// Pullback transport A -> g^{-T} A g^{-1}; maps a complex with center C to
// one with center g(C).
template <exact_field K>
Complex<K> transport(const Complex<K>& a, const Matrix<K>& g) {
  auto gi = inverse(g);
  if (!gi.has_value()) throw std::invalid_argument("transport requires invertible g");
  return Complex<K>::from_skew(congruence(gi->transpose(), a.rep()));
}

// Coordinates of a skew matrix in the basis (h_1, ..., h_m) of complexes,
// if it lies in their span.
template <exact_field K>
std::optional<std::vector<K>> alpha_coordinates(const SkewMatrix<K>& a,
                                                const std::vector<Complex<K>>& h,
                                                const K& exemplar) {
  if (h.empty()) throw std::invalid_argument("empty basis");
  const int n = h[0].size();
  const int d = n * (n - 1) / 2;
  Matrix<K> cols(d, static_cast<int>(h.size()), exemplar.zero());
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::vector<K> co = h[k].coordinates();
    for (int j = 0; j < d; ++j) cols(j, static_cast<int>(k)) = co[j];
  }
  std::vector<K> rhs = a.upper();
  auto sol = solve_linear(cols, rhs, exemplar);
  if (!sol.has_value()) return std::nullopt;
  return sol->particular;
}

// A line in sigma, written in H-basis coordinates by two spanning points,
// avoids every F_i /\ F_j exactly when all 2x2 minors on coordinate pairs
// are nonzero.
template <exact_field K>
bool sigma_line_valid(const std::vector<K>& a1, const std::vector<K>& a2,
                      const K& exemplar) {
  if (a1.size() != a2.size() || a1.size() < 2) {
    throw std::invalid_argument("need two coordinate vectors of equal length >= 2");
  }
  const int m = static_cast<int>(a1.size());
  Matrix<K> two(2, m, exemplar.zero());
  for (int j = 0; j < m; ++j) {
    two(0, j) = a1[j];
    two(1, j) = a2[j];
  }
  if (rank_of(two) < 2) {
    throw std::invalid_argument("not a line");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      K minor = a1[i] * a2[j] - a1[j] * a2[i];
      if (minor.is_zero()) return false;
    }
  }
  return true;
}

namespace detail {

template <exact_field K>
SkewMatrix<K> combine(const std::vector<Complex<K>>& h, const std::vector<K>& alpha,
                      const K& exemplar) {
  const int n = h[0].size();
  const int d = n * (n - 1) / 2;
  std::vector<K> u(d, exemplar.zero());
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::vector<K> co = h[k].coordinates();
    for (int j = 0; j < d; ++j) u[j] = u[j] + alpha[k] * co[j];
  }
  return SkewMatrix<K>::from_upper(n, u, exemplar.zero());
}

}  // namespace detail

// Draws a pencil spanned by two random valid points of sigma. Such a pencil
// has exactly n/2 rank-drop points, all of corank 2, and its even
// degeneracy locus is exactly the input line configuration.
template <exact_field K>
SkewPencil<K> even_fiber_sample(const SigmaFrame<K>& frame, Rng& rng, const K& exemplar) {
  const int m = static_cast<int>(frame.h.size());
  constexpr int kRetries = 32;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<K> a1, a2;
    a1.reserve(m);
    a2.reserve(m);
    for (int j = 0; j < m; ++j) a1.push_back(exemplar.from_int(rng.uniform_int(-10, 10)));
    for (int j = 0; j < m; ++j) a2.push_back(exemplar.from_int(rng.uniform_int(-10, 10)));
    Matrix<K> two(2, m, exemplar.zero());
    for (int j = 0; j < m; ++j) {
      two(0, j) = a1[j];
      two(1, j) = a2[j];
    }
    if (rank_of(two) < 2) continue;
    if (!sigma_line_valid(a1, a2, exemplar)) continue;
    return SkewPencil<K>(detail::combine(frame.h, a1, exemplar),
                         detail::combine(frame.h, a2, exemplar));
  }
  if constexpr (std::is_same_v<K, Fp>) {
    throw genericity_error(genericity::field_too_small, "field too small");
  } else {
    throw genericity_error(genericity::no_generic_element, "no generic element found");
  }
}

template <exact_field K>
SkewPencil<K> even_fiber_sample(const std::vector<ProjSubspace<K>>& lines,
                                std::uint64_t seed, const K& exemplar) {
  SigmaFrame<K> frame = build_sigma(lines, exemplar);
  Rng rng(seed);
  return even_fiber_sample(frame, rng, exemplar);
}

// Same sampling, but sigma is built in standard coordinates and transported
// through the normalizing projectivity. With equal seeds this agrees with
// the direct path exactly, because canonical representatives coincide.
template <exact_field K>
SkewPencil<K> even_fiber_sample_transported(const std::vector<ProjSubspace<K>>& lines,
                                            std::uint64_t seed, const K& exemplar) {
  Matrix<K> g = normalizing_projectivity(lines, exemplar);
  const int n = lines[0].ambient_dim();
  std::vector<ProjSubspace<K>> std_lines = standard_lines(n, exemplar);
  SigmaFrame<K> std_frame = build_sigma(std_lines, exemplar);
  std::vector<Complex<K>> h;
  h.reserve(std_frame.h.size());
  for (const auto& hi : std_frame.h) h.push_back(transport(hi, g));
  ComplexSpace<K> sigma = ComplexSpace<K>::span_independent(h, exemplar);
  std::vector<ComplexSpace<K>> f;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::vector<Complex<K>> sub;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (j != i) sub.push_back(h[j]);
    }
    f.push_back(ComplexSpace<K>::span_independent(std::move(sub), exemplar));
  }
  SigmaFrame<K> frame{lines, std::move(h), std::move(sigma), std::move(f)};
  Rng rng(seed);
  return even_fiber_sample(frame, rng, exemplar);
}

}  // namespace linc
