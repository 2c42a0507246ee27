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

#include "linc/errors.hpp"
#include "linc/pencil.hpp"
#include "linc/rng.hpp"

namespace linc {

// The staircase pencil N_k (k odd): superdiagonal entries alternate y0, y1
// starting with y0, all other entries zero (skew-completed). Its signed
// sub-Pfaffian vector consists of the (k+1)/2 distinct degree-(k-1)/2
// monomials at the odd positions (1-based) and zeros at the even positions,
// so the sub-Pfaffians span the whole space of forms of that degree.
template <exact_field K>
SkewPencil<K> staircase_pencil(int k, const K& exemplar) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("staircase pencil needs odd k >= 3");
  const int d = k * (k - 1) / 2;
  std::vector<K> u0(d, exemplar.zero());
  std::vector<K> u1(d, exemplar.zero());
  for (int i = 0; i + 1 < k; ++i) {
    // 0-based row i: superdiagonal entry (i, i+1) is y0 for even i, y1 for odd.
    int idx = upper_index(k, i, i + 1);
    if (i % 2 == 0) {
      u0[idx] = exemplar.one();
    } else {
      u1[idx] = exemplar.one();
    }
  }
  return SkewPencil<K>(SkewMatrix<K>::from_upper(k, u0, exemplar.zero()),
                       SkewMatrix<K>::from_upper(k, u1, exemplar.zero()));
}

// Vector of n binary forms of degree (n-1)/2, the prescribed sub-Pfaffian
// data for odd-case realization.
template <exact_field K>
struct FormVector {
  std::vector<BinaryForm<K>> forms;

  explicit FormVector(std::vector<BinaryForm<K>> f) : forms(std::move(f)) {
    const int n = static_cast<int>(forms.size());
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("need an odd number n >= 3 of forms");
    const int m = (n - 1) / 2;
    for (const auto& g : forms) {
      if (g.degree() != m) throw std::invalid_argument("forms must have degree (n-1)/2");
    }
  }

  int n() const { return static_cast<int>(forms.size()); }
  int form_degree() const { return (n() - 1) / 2; }

  // The forms span the whole space of degree-(n-1)/2 forms exactly when the
  // coefficient matrix has rank (n+1)/2.
  bool spanning() const { return coeff_matrix_rank(forms) == (n() + 1) / 2; }
};

namespace detail {

// Reads the monomial structure of the staircase sub-Pfaffian vector:
// for each position c, either nothing (zero form) or the pair
// (coefficient index, sign) of its single nonzero monomial.
template <exact_field K>
struct MonomialSlot {
  int position;     // index into the sub-Pfaffian vector
  int coeff_index;  // index into the coefficient vector of a form
  K sign;           // +1 or -1
};

template <exact_field K>
std::vector<MonomialSlot<K>> staircase_slots(int n, const K& exemplar) {
  SkewPencil<K> nk = staircase_pencil(n, exemplar);
  std::vector<BinaryForm<K>> p = pencil_subpf(nk, exemplar);
  std::vector<MonomialSlot<K>> slots;
  for (int c = 0; c < n; ++c) {
    if (p[c].is_zero()) continue;
    int idx = -1;
    for (int t = 0; t <= p[c].degree(); ++t) {
      if (p[c][t].is_zero()) continue;
      if (idx >= 0) throw std::logic_error("staircase sub-Pfaffian is not a monomial");
      idx = t;
    }
    K s = p[c][idx];
    if (!(s == exemplar.one() || s == -exemplar.one())) {
      throw std::logic_error("staircase sub-Pfaffian has a non-unit coefficient");
    }
    slots.push_back({c, idx, s});
  }
  if (static_cast<int>(slots.size()) != (n + 1) / 2) {
    throw std::logic_error("staircase sub-Pfaffians have the wrong support");
  }
  return slots;
}

}  // namespace detail

// Builds a pencil whose signed sub-Pfaffian vector is exactly proportional
// to the given spanning forms. Mechanism: the sub-Pfaffian vector spans the
// kernel of the pencil at every point, and kernels transport along a
// congruence A -> M A M^T by M^{-T}; choosing M = beta^{-T} with
// beta * p(staircase) = f componentwise therefore lands the staircase
// kernel onto f up to one global scalar. The proportionality is recomputed
// and certified; failure is an internal error, never a silent wrong answer.
template <exact_field K>
SkewPencil<K> realize_pfaffians(const FormVector<K>& f, const K& exemplar) {
  if (!f.spanning()) {
    throw genericity_error(genericity::not_spanning, "forms do not span");
  }
  const int n = f.n();
  auto slots = detail::staircase_slots<K>(n, exemplar);

  Matrix<K> beta(n, n, exemplar.zero());
  std::vector<bool> filled(n, false);
  for (const auto& slot : slots) {
    for (int r = 0; r < n; ++r) {
      beta(r, slot.position) = f.forms[r][slot.coeff_index] / slot.sign;
    }
    filled[slot.position] = true;
  }

  // Complete the remaining columns greedily with standard basis vectors,
  // keeping the chosen set independent at every step.
  std::vector<int> chosen;
  for (int c = 0; c < n; ++c) {
    if (filled[c]) chosen.push_back(c);
  }
  auto columns_rank = [&](const std::vector<int>& cols) {
    Matrix<K> sub(n, static_cast<int>(cols.size()), exemplar.zero());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (int r = 0; r < n; ++r) sub(r, static_cast<int>(k)) = beta(r, cols[k]);
    }
    return rank_of(sub);
  };
  if (columns_rank(chosen) != static_cast<int>(chosen.size())) {
    throw genericity_error(genericity::not_spanning, "forms do not span");
  }
  for (int c = 0; c < n; ++c) {
    if (filled[c]) continue;
    bool done = false;
    for (int t = 0; t < n && !done; ++t) {
      for (int r = 0; r < n; ++r) {
        beta(r, c) = (r == t) ? exemplar.one() : exemplar.zero();
      }
      std::vector<int> trial = chosen;
      trial.push_back(c);
      if (columns_rank(trial) == static_cast<int>(trial.size())) {
        chosen.push_back(c);
        done = true;
      }
    }
    if (!done) {
      throw genericity_error(genericity::not_spanning, "forms do not span");
    }
  }

  auto beta_inv = inverse(beta);
  if (!beta_inv.has_value()) {
    throw std::logic_error("completed beta is singular");
  }
  Matrix<K> m = beta_inv->transpose();
  SkewPencil<K> nk = staircase_pencil(n, exemplar);
  SkewPencil<K> out(congruence(m, nk.n0), congruence(m, nk.n1));

  // Certificate: sub-Pfaffians of the result are a nonzero multiple of f.
  std::vector<BinaryForm<K>> p = pencil_subpf(out, exemplar);
  bool nonzero = false;
  for (const auto& g : p) nonzero = nonzero || !g.is_zero();
  if (!nonzero) throw std::logic_error("realized pencil has zero sub-Pfaffians");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(p[i] * f.forms[j] == p[j] * f.forms[i])) {
        throw std::logic_error("realization certificate failed");
      }
    }
  }
  return out;
}

// The linear space of all pencils annihilating f: pairs (N0, N1) of skew
// matrices with (y0 N0 + y1 N1) f(y) = 0 identically, computed as the
// nullspace of the n*((n-1)/2 + 2) x n(n-1) coefficient system.
template <exact_field K>
struct PencilSolutionSpace {
  std::vector<BinaryForm<K>> defining_forms;
  std::vector<SkewPencil<K>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

template <exact_field K>
PencilSolutionSpace<K> fiber_system(const FormVector<K>& f, const K& exemplar) {
  if (!f.spanning()) {
    throw genericity_error(genericity::not_spanning, "forms do not span");
  }
  const int n = f.n();
  const int m = f.form_degree();
  const int d = n * (n - 1) / 2;
  Matrix<K> sys(n * (m + 2), 2 * d, exemplar.zero());
  int row = 0;
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t <= m + 1; ++t, ++row) {
      for (int c = 0; c < n; ++c) {
        if (c == r) continue;
        int idx = (r < c) ? upper_index(n, r, c) : upper_index(n, c, r);
        K sgn_one = (r < c) ? exemplar.one() : -exemplar.one();
        // (y0 N0 + y1 N1)_{rc} f_c contributes to the coefficient of
        // y0^{m+1-t} y1^t: the y0 part shifts nothing, the y1 part shifts
        // the coefficient index by one.
        if (t <= m) {
          sys(row, idx) = sys(row, idx) + sgn_one * f.forms[c][t];
        }
        if (t >= 1) {
          sys(row, d + idx) = sys(row, d + idx) + sgn_one * f.forms[c][t - 1];
        }
      }
    }
  }
  auto kernel = nullspace(sys, exemplar);
  PencilSolutionSpace<K> out{f.forms, {}};
  out.basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    std::vector<K> u0(v.begin(), v.begin() + d);
    std::vector<K> u1(v.begin() + d, v.end());
    out.basis.emplace_back(SkewMatrix<K>::from_upper(n, u0, exemplar.zero()),
                           SkewMatrix<K>::from_upper(n, u1, exemplar.zero()));
  }
  return out;
}

// True when the sub-Pfaffian vector of p is a nonzero constant multiple
// of f (all cross-products vanish and the vector is nonzero).
template <exact_field K>
bool subpf_proportional(const SkewPencil<K>& p, const std::vector<BinaryForm<K>>& f,
                        const K& exemplar) {
  std::vector<BinaryForm<K>> q = pencil_subpf(p, exemplar);
  bool nonzero = false;
  for (const auto& g : q) nonzero = nonzero || !g.is_zero();
  if (!nonzero) return false;
  const int n = static_cast<int>(f.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(q[i] * f[j] == q[j] * f[i])) return false;
    }
  }
  return true;
}

// Random certified member of the fiber over f: an exact random combination
// of the solution-space basis, accepted only if its sub-Pfaffian vector is
// a nonzero multiple of f (this filters the rank-degenerate locus).
template <exact_field K>
SkewPencil<K> fiber_sample(const PencilSolutionSpace<K>& space, Rng& rng,
                           const K& exemplar) {
  if (space.basis.empty()) {
    throw genericity_error(genericity::no_generic_element, "no generic element found");
  }
  const int n = space.basis[0].size();
  const int d = n * (n - 1) / 2;
  constexpr int kRetries = 64;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<K> u0(d, exemplar.zero()), u1(d, exemplar.zero());
    for (const auto& b : space.basis) {
      K c = exemplar.from_int(rng.uniform_int(-10, 10));
      if (c.is_zero()) continue;
      std::vector<K> b0 = b.n0.upper(), b1 = b.n1.upper();
      for (int j = 0; j < d; ++j) {
        u0[j] = u0[j] + c * b0[j];
        u1[j] = u1[j] + c * b1[j];
      }
    }
    SkewPencil<K> cand(SkewMatrix<K>::from_upper(n, u0, exemplar.zero()),
                       SkewMatrix<K>::from_upper(n, u1, exemplar.zero()));
    if (subpf_proportional(cand, space.defining_forms, exemplar)) return cand;
  }
  throw genericity_error(genericity::no_generic_element, "no generic element found");
}

template <exact_field K>
SkewPencil<K> fiber_sample(const FormVector<K>& f, std::uint64_t seed, const K& exemplar) {
  PencilSolutionSpace<K> space = fiber_system(f, exemplar);
  Rng rng(seed);
  return fiber_sample(space, rng, exemplar);
}

// Projective-pair comparison of pencils: equal iff the concatenated
// generator coordinates are proportional.
template <exact_field K>
bool pencils_proportional(const SkewPencil<K>& a, const SkewPencil<K>& b,
                          const K& exemplar) {
  if (a.size() != b.size()) return false;
  std::vector<K> u = a.n0.upper(), v = b.n0.upper();
  std::vector<K> u1 = a.n1.upper(), v1 = b.n1.upper();
  u.insert(u.end(), u1.begin(), u1.end());
  v.insert(v.end(), v1.begin(), v1.end());
  Matrix<K> two(2, static_cast<int>(u.size()), exemplar.zero());
  for (std::size_t j = 0; j < u.size(); ++j) {
    two(0, static_cast<int>(j)) = u[j];
    two(1, static_cast<int>(j)) = v[j];
  }
  return rank_of(two) < 2;
}

}  // namespace linc
