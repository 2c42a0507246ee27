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

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linc/binary_form.hpp"
#include "linc/errors.hpp"
#include "linc/matrix.hpp"
#include "linc/subspace.hpp"

namespace linc {

// Pencil of skew-symmetric n x n matrices, stored as an ordered generator
// pair: N(y) = y0*N0 + y1*N1. Equivalently a skew matrix of degree-1 binary
// forms (see form_matrix).
template <exact_field K>
struct SkewPencil {
  SkewMatrix<K> n0, n1;

  SkewPencil(SkewMatrix<K> a, SkewMatrix<K> b) : n0(std::move(a)), n1(std::move(b)) {
    if (n0.size() != n1.size()) {
      throw std::invalid_argument("pencil generators differ in size");
    }
  }

  int size() const { return n0.size(); }

  bool operator==(const SkewPencil& o) const { return n0 == o.n0 && n1 == o.n1; }
};

// The pencil as one skew matrix over the ring of degree-1 binary forms.
template <exact_field K>
SkewMatrix<BinaryForm<K>> form_matrix(const SkewPencil<K>& p, const K& exemplar) {
  const int n = p.size();
  std::vector<K> u0 = p.n0.upper();
  std::vector<K> u1 = p.n1.upper();
  std::vector<BinaryForm<K>> upper;
  upper.reserve(u0.size());
  for (std::size_t k = 0; k < u0.size(); ++k) {
    upper.push_back(BinaryForm<K>({u0[k], u1[k]}));
  }
  return SkewMatrix<BinaryForm<K>>::from_upper(
      n, upper, BinaryForm<K>::zero_of_degree(1, exemplar));
}

// Exact evaluation b0*N0 + b1*N1.
template <exact_field K>
SkewMatrix<K> pencil_eval(const SkewPencil<K>& p, const K& b0, const K& b1) {
  std::vector<K> u0 = p.n0.upper();
  std::vector<K> u1 = p.n1.upper();
  std::vector<K> u;
  u.reserve(u0.size());
  for (std::size_t k = 0; k < u0.size(); ++k) u.push_back(b0 * u0[k] + b1 * u1[k]);
  return SkewMatrix<K>::from_upper(p.size(), u, (b0 + b1).zero());
}

template <exact_field K>
SkewMatrix<K> pencil_eval(const SkewPencil<K>& p, const PointP1<K>& pt) {
  return pencil_eval(p, pt.c0(), pt.c1());
}

// Pfaffian of the pencil as a binary form: degree n/2 for even n, the zero
// constant for odd n (odd skew matrices have Pfaffian 0).
template <exact_field K>
BinaryForm<K> pencil_pf(const SkewPencil<K>& p, const K& exemplar) {
  const int n = p.size();
  if (n % 2 == 1) return BinaryForm<K>::zero_of_degree(0, exemplar);
  return pfaffian(form_matrix(p, exemplar));
}

// Signed sub-Pfaffian vector of an odd pencil: n forms of degree (n-1)/2
// satisfying (y0 N0 + y1 N1) p(y) = 0 identically.
template <exact_field K>
std::vector<BinaryForm<K>> pencil_subpf(const SkewPencil<K>& p, const K& exemplar) {
  if (p.size() % 2 == 0) {
    throw std::invalid_argument("sub-Pfaffian vector requires an odd pencil");
  }
  return subpfaffian_vector(form_matrix(p, exemplar));
}

// ---------------------------------------------------------------------------
// Degeneracy loci.
// ---------------------------------------------------------------------------

template <exact_field K>
struct CorankProfile {
  struct Item {
    PointP1<K> point;
    int multiplicity;  // as a root of the Pfaffian form
    int corank;        // n - rank of the evaluated matrix
  };
  std::vector<Item> items;   // sorted by canonical point text
  int nonsplit_degree;       // degree of the root-free remainder factor
  BinaryForm<K> remainder;   // the root-free factor itself, normalized
  BinaryForm<K> pfaffian;    // the Pfaffian form itself
};

// Where (and how badly) an even pencil drops rank: evaluates the pencil at
// every field-rational root of its Pfaffian.
template <exact_field K>
CorankProfile<K> corank_profile(const SkewPencil<K>& p, const K& exemplar) {
  const int n = p.size();
  if (n % 2 == 1) throw std::invalid_argument("corank profile requires an even pencil");
  BinaryForm<K> pf = pencil_pf(p, exemplar);
  if (pf.is_zero()) {
    throw genericity_error(genericity::degenerate_pencil, "degenerate pencil");
  }
  RootList<K> rl = roots(pf);
  CorankProfile<K> out{{}, rl.remainder.degree(), rl.remainder, pf};
  for (const auto& [pt, mult] : rl.roots) {
    SkewMatrix<K> a = pencil_eval(p, pt);
    int corank = n - rank_of(a.matrix());
    out.items.push_back({pt, mult, corank});
  }
  return out;
}

// Even-case degeneracy locus: one kernel line per Pfaffian root. Equality
// is set equality of canonical lines; roots are reported alongside.
template <exact_field K>
struct DegLocusEven {
  struct Item {
    PointP1<K> point;
    ProjSubspace<K> line;
  };
  std::vector<Item> items;  // sorted by canonical point text
  BinaryForm<K> remainder;  // root-free factor of Pf; constant 1 here since
                            // a positive degree raises "roots outside field"

  std::vector<std::string> line_keys() const {
    std::vector<std::string> keys;
    keys.reserve(items.size());
    for (const auto& it : items) keys.push_back(it.line.key());
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  bool same_line_set(const DegLocusEven& o) const {
    return line_keys() == o.line_keys();
  }
};

template <exact_field K>
DegLocusEven<K> deg_locus_even(const SkewPencil<K>& p, const K& exemplar) {
  const int n = p.size();
  CorankProfile<K> prof = corank_profile(p, exemplar);
  for (const auto& it : prof.items) {
    if (it.multiplicity > 1) {
      throw genericity_error(genericity::repeated_root,
                             "non-generic pencil (repeated root)");
    }
  }
  if (prof.nonsplit_degree > 0) {
    throw genericity_error(genericity::roots_outside_field, "roots outside field");
  }
  DegLocusEven<K> out{{}, prof.remainder};
  for (const auto& it : prof.items) {
    if (it.corank > 2) {
      throw genericity_error(genericity::excess_corank,
                             "special complex of the second type on pencil");
    }
    // corank is even and positive at a Pfaffian root, so it is exactly 2.
    SkewMatrix<K> a = pencil_eval(p, it.point);
    auto kernel = nullspace(a.matrix(), exemplar);
    ProjSubspace<K> line = ProjSubspace<K>::from_vectors(kernel, n, exemplar);
    out.items.push_back({it.point, std::move(line)});
  }
  return out;
}

// Odd-case degeneracy locus: the sub-Pfaffian parameterization, scaled so
// the first nonzero coefficient of the first nonzero form is 1.
template <exact_field K>
struct DegLocusOdd {
  std::vector<BinaryForm<K>> forms;
};

template <exact_field K>
DegLocusOdd<K> deg_locus_odd(const SkewPencil<K>& p, const K& exemplar) {
  std::vector<BinaryForm<K>> forms = pencil_subpf(p, exemplar);
  bool all_zero = std::all_of(forms.begin(), forms.end(),
                              [](const auto& f) { return f.is_zero(); });
  if (all_zero) {
    throw genericity_error(genericity::submaximal_rank, "pencil of sub-maximal rank");
  }
  // Fold gcd over the nonzero forms; a nonconstant common factor means the
  // parameterization has base points. gcd() returns its true degree.
  BinaryForm<K> g = BinaryForm<K>::zero_of_degree(forms[0].degree(), exemplar);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    g = g.is_zero() ? f : gcd(g, f);
  }
  if (g.degree() > 0) {
    throw genericity_error(genericity::base_points, "non-generic pencil (base points)");
  }
  // Scale all forms by the inverse of the first nonzero coefficient of the
  // first nonzero form.
  K scale = exemplar.one();
  for (const auto& f : forms) {
    int i = f.first_nonzero();
    if (i >= 0) {
      scale = f[i].inv();
      break;
    }
  }
  DegLocusOdd<K> out{{}};
  out.forms.reserve(forms.size());
  for (const auto& f : forms) out.forms.push_back(f.scale(scale));
  return out;
}

}  // namespace linc
