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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include "linc/binary_form.hpp"
#include "linc/rng.hpp"
#include "linc/sampling.hpp"

using namespace linc;

static Rational q(long long n) { return Rational(n); }

static BinaryForm<Rational> form(std::vector<long long> c) {
  std::vector<Rational> e;
  e.reserve(c.size());
  for (long long x : c) e.push_back(Rational(x));
  return BinaryForm<Rational>(std::move(e));
}

TEST_CASE("projective point canonicalization") {
  PointP1<Rational> p(q(2), q(3));
  CHECK(p.c0() == q(1));
  CHECK(p.c1() == Rational(3, 2));
  PointP1<Rational> inf(q(0), q(-7));
  CHECK(inf.c0().is_zero());
  CHECK(inf.c1() == q(1));
  CHECK(PointP1<Rational>(q(2), q(3)) == PointP1<Rational>(q(4), q(6)));
  CHECK_THROWS_WITH_AS(PointP1<Rational>(q(0), q(0)),
                       "(0,0) does not define a projective point",
                       std::invalid_argument);
}

TEST_CASE("multiplication") {
  auto y0 = form({1, 0});
  auto y1 = form({0, 1});
  CHECK(y0 * y1 == form({0, 1, 0}));               // y0*y1
  auto s = form({1, 1});                           // y0 + y1
  CHECK(s * s == form({1, 2, 1}));                 // y0^2 + 2 y0y1 + y1^2
  auto z2 = BinaryForm<Rational>::zero_of_degree(2, q(0));
  CHECK(s * z2 == BinaryForm<Rational>::zero_of_degree(3, q(0)));
  CHECK((s * z2).is_zero());
}

TEST_CASE("evaluation") {
  auto y0y1 = form({0, 1, 0});
  CHECK(y0y1.eval_at(PointP1<Rational>(q(1), q(0))).is_zero());
  auto circ = form({1, 0, 1});  // y0^2 + y1^2
  CHECK(circ.eval_at(PointP1<Rational>(q(1), q(1))) == q(2));
  auto y00y1 = form({0, 1, 0, 0});  // y0^2 * y1
  CHECK(y00y1.eval(q(2), q(3)) == q(12));
}

TEST_CASE("roots on the projective line over Q") {
  auto y0y1 = form({0, 1, 0});
  auto r1 = roots(y0y1);
  REQUIRE(r1.roots.size() == 2);
  CHECK(r1.roots[0].first == PointP1<Rational>(q(0), q(1)));
  CHECK(r1.roots[0].second == 1);
  CHECK(r1.roots[1].first == PointP1<Rational>(q(1), q(0)));
  CHECK(r1.roots[1].second == 1);
  CHECK(r1.remainder.degree() == 0);
  CHECK(r1.remainder[0] == q(1));

  // (y0 - 2 y1)^2 = y0^2 - 4 y0y1 + 4 y1^2 vanishes at [2:1] doubly.
  auto sq = form({1, -4, 4});
  auto r2 = roots(sq);
  REQUIRE(r2.roots.size() == 1);
  CHECK(r2.roots[0].first == PointP1<Rational>(q(2), q(1)));
  CHECK(r2.roots[0].second == 2);
  CHECK(r2.remainder.degree() == 0);

  auto circ = form({1, 0, 1});
  auto r3 = roots(circ);
  CHECK(r3.roots.empty());
  CHECK(r3.remainder == circ);

  CHECK_THROWS_WITH_AS(roots(BinaryForm<Rational>::zero_of_degree(2, q(0))),
                       "zero form has no root set", std::invalid_argument);
}

TEST_CASE("roots over a prime field") {
  uint64_t p = 101;
  auto fp = [&](long long v) { return fp_embed(v, p); };
  // y0^2 - y1^2 = (y0-y1)(y0+y1): roots [1:1] and [1:-1].
  BinaryForm<Fp> f({fp(1), fp(0), fp(-1)});
  auto r = roots(f);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.remainder.degree() == 0);
  bool saw_one = false, saw_minus = false;
  for (const auto& [pt, m] : r.roots) {
    CHECK(m == 1);
    if (pt == PointP1<Fp>(fp(1), fp(1))) saw_one = true;
    if (pt == PointP1<Fp>(fp(1), fp(-1))) saw_minus = true;
  }
  CHECK(saw_one);
  CHECK(saw_minus);

  // t^2 = 2 has no solution mod 101 (2 is a non-residue): irreducible.
  BinaryForm<Fp> g({fp(-2), fp(0), fp(1)});
  auto rg = roots(g);
  CHECK(rg.roots.empty());
  CHECK(rg.remainder.degree() == 2);
}

template <exact_field K>
static void check_reassembly(const BinaryForm<K>& f) {
  auto rl = roots(f);
  BinaryForm<K> prod = rl.remainder;
  for (const auto& [pt, m] : rl.roots) {
    // Linear form vanishing at [b0:b1] is b1*y0 - b0*y1.
    BinaryForm<K> lin({pt.c1(), -pt.c0()});
    for (int k = 0; k < m; ++k) prod = prod * lin;
  }
  REQUIRE(prod.degree() == f.degree());
  // Equal up to the nonzero scalar fixed by matching first coefficients.
  int i = f.first_nonzero();
  REQUIRE(i >= 0);
  REQUIRE(i == prod.first_nonzero());
  K s = f[i] / prod[i];
  CHECK(prod.scale(s) == f);
}

TEST_CASE("random products of linear forms reassemble") {
  Rng rng(101);
  int done = 0;
  while (done < 100) {
    int nfac = 1 + static_cast<int>(rng.uniform_int(0, 3));
    BinaryForm<Rational> f({q(rng.uniform_int(-10, 10)), q(rng.uniform_int(-10, 10))});
    if (f.is_zero()) continue;
    for (int k = 1; k < nfac; ++k) {
      BinaryForm<Rational> lin({q(rng.uniform_int(-10, 10)), q(rng.uniform_int(-10, 10))});
      if (lin.is_zero()) continue;
      f = f * lin;
    }
    check_reassembly(f);
    ++done;
  }

  Rng rng2(102);
  Fp z0 = fp_embed(0, 101);
  for (int t = 0; t < 40; ++t) {
    auto f = random_form(3, rng2, z0);
    if (f.is_zero()) continue;
    check_reassembly(f);
  }
}

TEST_CASE("gcd of binary forms") {
  auto y0y1 = form({0, 1, 0});
  auto y0sq = form({1, 0, 0});
  CHECK(gcd(y0y1, y0sq) == form({1, 0}));  // y0

  auto a = form({1, 1});
  auto b = form({1, -1});
  auto g = gcd(a, b);
  CHECK(g.degree() == 0);
  CHECK(g[0] == q(1));

  auto f = form({2, 2});  // 2(y0 + y1)
  auto gz = gcd(f, BinaryForm<Rational>::zero_of_degree(1, q(0)));
  CHECK(gz == form({1, 1}));  // normalized

  CHECK_THROWS_WITH_AS(gcd(BinaryForm<Rational>::zero_of_degree(1, q(0)),
                           BinaryForm<Rational>::zero_of_degree(2, q(0))),
                       "gcd of two zero forms", std::invalid_argument);

  // Shared y1 power plus shared affine factor.
  auto y1 = form({0, 1});
  auto common = y1 * form({1, -3});        // y1 (y0 - 3 y1)
  auto f1 = common * form({1, 2});
  auto f2 = common * form({5, 1});
  auto gg = gcd(f1, f2);
  CHECK(gg.degree() == 2);
  // The gcd carries the full common factor, up to a scalar.
  int i = gg.first_nonzero();
  REQUIRE(i == common.first_nonzero());
  Rational s = common[i] / gg[i];
  CHECK(gg.scale(s) == common);
}

TEST_CASE("random gcd properties") {
  Rng rng(103);
  for (int t = 0; t < 50; ++t) {
    auto f = random_form(2, rng, q(0));
    auto g = random_form(2, rng, q(0));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).degree() == 4);
    auto d = gcd(f * g, f);
    // f divides f*g and f, so gcd has at least deg f; it is proportional to f
    // whenever gcd(f, g) is constant, and always divisible by f's gcd part.
    REQUIRE(d.degree() >= f.degree());
    if (d.degree() == f.degree()) {
      int i = f.first_nonzero();
      REQUIRE(i == d.first_nonzero());
      Rational s = f[i] / d[i];
      CHECK(d.scale(s) == f);
    }
  }
}

TEST_CASE("evaluation is multiplicative") {
  Rng rng(104);
  for (int t = 0; t < 50; ++t) {
    auto f = random_form(2, rng, q(0));
    auto g = random_form(3, rng, q(0));
    long long b0 = rng.uniform_int(-10, 10), b1 = rng.uniform_int(-10, 10);
    if (b0 == 0 && b1 == 0) b1 = 1;
    PointP1<Rational> p(q(b0), q(b1));
    CHECK((f * g).eval_at(p) == f.eval_at(p) * g.eval_at(p));
  }
}

TEST_CASE("coefficient matrix rank") {
  auto y0sq = form({1, 0, 0});
  auto y0y1 = form({0, 1, 0});
  auto y1sq = form({0, 0, 1});
  CHECK(coeff_matrix_rank<Rational>({y0sq, y0y1, y1sq}) == 3);
  CHECK(coeff_matrix_rank<Rational>({y0sq, y0sq.scale(q(2))}) == 1);
  CHECK_THROWS_WITH_AS(coeff_matrix_rank<Rational>({y0sq, form({1, 0})}),
                       "mixed degrees in family", std::invalid_argument);
  CHECK_THROWS_WITH_AS(coeff_matrix_rank<Rational>({}),
                       "empty family of forms", std::invalid_argument);
}

TEST_CASE("degree mismatch in addition") {
  CHECK_THROWS_WITH_AS(form({1, 0}) + form({1, 0, 0}), "degree mismatch",
                       std::invalid_argument);
}
