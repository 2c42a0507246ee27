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

// End-to-end acceptance suite. Each numbered criterion prints one
// [PASS]/[FAIL] line with its wall-clock time; the process exits nonzero
// if any criterion fails. Every random draw is seeded, so reruns are
// byte-identical.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "linc/binary_form.hpp"
#include "linc/complexes.hpp"
#include "linc/fields.hpp"
#include "linc/json_io.hpp"
#include "linc/matrix.hpp"
#include "linc/odd_fibers.hpp"
#include "linc/pencil.hpp"
#include "linc/rng.hpp"
#include "linc/sampling.hpp"
#include "linc/subspace.hpp"
#include "oracles.hpp"

using namespace linc;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    pass = false;
    if (note.empty()) note = why;
  }
};

// --- 1. Pfaffian squared equals the determinant ------------------------------

template <exact_field K>
void check_pf_squared(const K& exemplar, std::uint64_t seed, Outcome& out) {
  Rng rng(seed);
  for (int n : {2, 4, 6, 8, 10}) {
    for (int t = 0; t < 100; ++t) {
      SkewMatrix<K> a = random_skew(n, rng, exemplar);
      K pf = pfaffian(a);
      K det = oracle::bareiss_det(a.matrix());
      if (!(pf * pf == det)) {
        out.fail("Pf(A)^2 != det(A) at n=" + std::to_string(n) + " trial " +
                 std::to_string(t));
        return;
      }
    }
  }
}

Outcome criterion_pf_squared() {
  Outcome out;
  check_pf_squared(Rational(), 0xA001, out);
  check_pf_squared(Fp(0, 10007), 0xA002, out);
  return out;
}

// --- 2. Kernel identity A p(A) = 0 -------------------------------------------

template <exact_field K>
void check_kernel_matrices(const K& exemplar, std::uint64_t seed, Outcome& out) {
  Rng rng(seed);
  for (int n : {3, 5, 7, 9}) {
    for (int t = 0; t < 100; ++t) {
      SkewMatrix<K> a = random_skew(n, rng, exemplar);
      std::vector<K> p = subpfaffian_vector(a);
      std::vector<K> r = oracle::matvec(a.matrix(), p);
      for (const auto& x : r) {
        if (!x.is_zero()) {
          out.fail("A p != 0 at n=" + std::to_string(n) + " trial " +
                   std::to_string(t));
          return;
        }
      }
    }
  }
}

Outcome criterion_kernel_identity() {
  Outcome out;
  check_kernel_matrices(Rational(), 0xB001, out);
  check_kernel_matrices(Fp(0, 10007), 0xB002, out);
  Rng rng(0xB003);
  Rational ex;
  for (int n : {5, 7}) {
    for (int t = 0; t < 50; ++t) {
      SkewPencil<Rational> p = random_pencil(n, rng, ex);
      std::vector<BinaryForm<Rational>> f = pencil_subpf(p, ex);
      auto r = oracle::matvec(form_matrix(p, ex).matrix(), f);
      for (const auto& g : r) {
        if (!g.is_zero()) {
          out.fail("ring identity N(y) p(y) = 0 fails at n=" +
                   std::to_string(n) + " trial " + std::to_string(t));
          return out;
        }
      }
    }
  }
  return out;
}

// --- 3. Staircase sub-Pfaffians are the full monomial basis ------------------

Outcome criterion_staircase_monomials() {
  Outcome out;
  Rational ex;
  for (int k : {3, 5, 7, 9, 11}) {
    const int m = (k - 1) / 2;
    auto p = pencil_subpf(staircase_pencil(k, ex), ex);
    // Expected up to one global sign: p[2i] = s * y0^i y1^(m-i), odd slots 0.
    int sign = 0;
    for (int i = 0; i <= m && sign == 0; ++i) {
      BinaryForm<Rational> want = BinaryForm<Rational>::monomial(m, m - i, ex.one());
      if (p[2 * i] == want) sign = 1;
      if (p[2 * i] == want.scale(-ex.one())) sign = -1;
    }
    if (sign == 0) {
      out.fail("no monomial entry found at k=" + std::to_string(k));
      return out;
    }
    for (int i = 0; i <= m; ++i) {
      BinaryForm<Rational> want =
          BinaryForm<Rational>::monomial(m, m - i, ex.from_int(sign));
      if (!(p[2 * i] == want)) {
        out.fail("even slot " + std::to_string(2 * i) + " wrong at k=" +
                 std::to_string(k));
        return out;
      }
    }
    for (int i = 0; 2 * i + 1 < k; ++i) {
      if (!p[2 * i + 1].is_zero()) {
        out.fail("odd slot " + std::to_string(2 * i + 1) + " nonzero at k=" +
                 std::to_string(k));
        return out;
      }
    }
    Matrix<Rational> coeffs(k, m + 1, ex.zero());
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c <= m; ++c) coeffs(r, c) = p[r][c];
    }
    if (rank_of(coeffs) != (k + 1) / 2) {
      out.fail("coefficient rank != (k+1)/2 at k=" + std::to_string(k));
      return out;
    }
  }
  return out;
}

// --- 4. Fibers of the center map over lines ----------------------------------

Outcome criterion_gauss_fiber_dimension() {
  Outcome out;
  Rational ex;
  Rng rng(0xD001);
  const std::vector<std::pair<int, int>> cases = {{4, 0}, {6, 5}, {8, 14}, {10, 27}};
  for (auto [n, expected] : cases) {
    if (expected != (n - 1) * (n - 4) / 2) {
      out.fail("expectation table inconsistent at n=" + std::to_string(n));
      return out;
    }
    for (int t = 0; t < 10; ++t) {
      ProjSubspace<Rational> line = random_line(n, rng, ex);
      int dim = gauss_fiber(line, ex).proj_dim();
      if (dim != expected) {
        out.fail("dim=" + std::to_string(dim) + " expected " +
                 std::to_string(expected) + " at n=" + std::to_string(n));
        return out;
      }
    }
  }
  return out;
}

// --- 5. Even fibers reproduce their line configuration -----------------------

Outcome criterion_even_roundtrip() {
  Outcome out;
  Rational ex;
  Rng rng(0xE001);
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < 20; ++t) {
      auto lines = random_spanning_lines(n, rng, ex);
      SkewPencil<Rational> p = even_fiber_sample(lines, rng.next_u64(), ex);

      std::vector<std::string> want;
      for (const auto& l : lines) want.push_back(l.key());
      std::sort(want.begin(), want.end());
      if (deg_locus_even(p, ex).line_keys() != want) {
        out.fail("locus differs from input lines at n=" + std::to_string(n) +
                 " trial " + std::to_string(t));
        return out;
      }

      CorankProfile<Rational> prof = corank_profile(p, ex);
      if (static_cast<int>(prof.items.size()) != n / 2) {
        out.fail("rank-drop point count != n/2 at n=" + std::to_string(n));
        return out;
      }
      for (const auto& it : prof.items) {
        if (it.multiplicity != 1 || it.corank != 2) {
          out.fail("non-simple or corank != 2 point at n=" + std::to_string(n));
          return out;
        }
      }

      SigmaFrame<Rational> frame = build_sigma(lines, ex);
      if (frame.sigma.proj_dim() != (n - 2) / 2) {
        out.fail("sigma dimension != (n-2)/2 at n=" + std::to_string(n));
        return out;
      }
      // Lines inside a projective space of dimension (n-2)/2 form a
      // Grassmannian of dimension 2((n-2)/2 - 1) = n - 4.
      if (2 * (frame.sigma.proj_dim() - 1) != n - 4) {
        out.fail("line-space dimension != n-4 at n=" + std::to_string(n));
        return out;
      }
    }
  }
  return out;
}

// --- 6. The n = 4 fiber is a single pencil -----------------------------------

Outcome criterion_n4_single_fiber() {
  Outcome out;
  Rational ex;
  Rng rng(0xF001);
  for (int t = 0; t < 20; ++t) {
    auto lines = random_spanning_lines(4, rng, ex);
    std::uint64_t seed = rng.next_u64();
    SkewPencil<Rational> direct = even_fiber_sample(lines, seed, ex);
    SkewPencil<Rational> moved = even_fiber_sample_transported(lines, seed, ex);
    if (!(direct == moved)) {
      out.fail("construction paths disagree at trial " + std::to_string(t));
      return out;
    }
    SigmaFrame<Rational> frame = build_sigma(lines, ex);
    ComplexSpace<Rational> span = ComplexSpace<Rational>::span_independent(
        {Complex<Rational>::from_skew(direct.n0), Complex<Rational>::from_skew(direct.n1)},
        ex);
    if (!(span == frame.sigma)) {
      out.fail("pencil span != sigma at trial " + std::to_string(t));
      return out;
    }
  }
  return out;
}

// --- 7. Realization of prescribed sub-Pfaffians -------------------------------

Outcome criterion_odd_realization() {
  Outcome out;
  Rational ex;
  Rng rng(0x7001);
  for (int n : {5, 7, 9}) {
    for (int t = 0; t < 50; ++t) {
      FormVector<Rational> f = random_spanning_forms(n, rng, ex);
      SkewPencil<Rational> p = realize_pfaffians(f, ex);
      if (!subpf_proportional(p, f.forms, ex)) {
        out.fail("sub-Pfaffians not proportional to input at n=" +
                 std::to_string(n) + " trial " + std::to_string(t));
        return out;
      }
    }
  }
  return out;
}

// --- 8. Solution-space dimension of the fiber system --------------------------

Outcome criterion_odd_fiber_dimension() {
  Outcome out;
  Rational ex;
  Rng rng(0x8001);
  for (int n : {5, 7}) {
    const int expected = (n - 1) * (n - 2) / 2;
    for (int t = 0; t < 20; ++t) {
      // Draw style 1: sub-Pfaffians of a random pencil, kept when spanning.
      FormVector<Rational> from_pencil = [&] {
        for (;;) {
          FormVector<Rational> cand(pencil_subpf(random_pencil(n, rng, ex), ex));
          if (cand.spanning()) return cand;
        }
      }();
      // Draw style 2: raw random spanning coefficient vectors.
      FormVector<Rational> raw = random_spanning_forms(n, rng, ex);
      for (const FormVector<Rational>* f : {&from_pencil, &raw}) {
        int dim = fiber_system(*f, ex).dim();
        if (dim != expected) {
          // Persist the counterexample so the instance can be replayed.
          json bad;
          bad["n"] = std::to_string(n);
          bad["forms"] = forms_to_json(f->forms);
          bad["computed_dimension"] = std::to_string(dim);
          bad["expected_dimension"] = std::to_string(expected);
          std::ofstream dump("odd_fiber_dimension_counterexample.json");
          dump << bad.dump(2) << "\n";
          out.fail("dimension " + std::to_string(dim) + " != " +
                   std::to_string(expected) + " at n=" + std::to_string(n) +
                   ", instance saved to odd_fiber_dimension_counterexample.json");
          return out;
        }
      }
    }
  }
  return out;
}

// --- 9. The parameterization map is not injective for n = 5 -------------------

Outcome criterion_odd_non_injectivity() {
  Outcome out;
  Rational ex;
  Rng rng(0x9001);
  for (int t = 0; t < 10; ++t) {
    FormVector<Rational> f = random_spanning_forms(5, rng, ex);
    SkewPencil<Rational> origin = realize_pfaffians(f, ex);
    SkewPencil<Rational> other = fiber_sample(f, rng.next_u64(), ex);
    if (pencils_proportional(origin, other, ex)) {
      out.fail("sample equals the originating pencil at trial " +
               std::to_string(t));
      return out;
    }
    if (!(deg_locus_odd(origin, ex).forms == deg_locus_odd(other, ex).forms)) {
      out.fail("normalized parameterizations differ at trial " +
               std::to_string(t));
      return out;
    }
  }
  return out;
}

// --- 10. Dimension bookkeeping -------------------------------------------------

Outcome criterion_dimension_bookkeeping() {
  Outcome out;
  for (int n = 4; n <= 12; ++n) {
    const int d = n * (n - 1) / 2;     // dim of the space of skew forms
    const int pencils = 2 * (d - 2);   // dim of the space of pencils
    if (n % 2 == 0) {
      if (pencils - (n - 4) != n * n - 2 * n) {
        out.fail("even identity fails at n=" + std::to_string(n));
        return out;
      }
    } else {
      if (pencils - (n * n - 3 * n) / 2 != (n * n + n - 8) / 2) {
        out.fail("odd identity fails at n=" + std::to_string(n));
        return out;
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*fn)();
    double limit_secs;  // 0 = exactness-only criterion, no wall-clock bound
  };
  const std::vector<Entry> entries = {
      {"pfaffian-squared-equals-determinant", criterion_pf_squared, 30},
      {"kernel-identity", criterion_kernel_identity, 60},
      {"staircase-monomial-subpfaffians", criterion_staircase_monomials, 0},
      {"gauss-fiber-dimension", criterion_gauss_fiber_dimension, 0},
      {"even-fiber-roundtrip", criterion_even_roundtrip, 120},
      {"n4-fiber-is-a-single-pencil", criterion_n4_single_fiber, 0},
      {"odd-realization", criterion_odd_realization, 120},
      {"odd-fiber-dimension", criterion_odd_fiber_dimension, 180},
      {"odd-fiber-non-injectivity", criterion_odd_non_injectivity, 0},
      {"dimension-bookkeeping", criterion_dimension_bookkeeping, 0},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entries[i].fn();
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(stop - start).count();
    if (out.pass && entries[i].limit_secs > 0 && secs > entries[i].limit_secs) {
      out.fail("exceeded the " + std::to_string(static_cast<int>(entries[i].limit_secs)) +
               "s wall-clock bound");
    }
    std::printf("[%s] %zu. %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", i + 1,
                entries[i].name, secs, out.note.empty() ? "" : ": ",
                out.note.c_str());
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}
