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

#include "linc/matrix.hpp"
#include "linc/rng.hpp"
#include "linc/sampling.hpp"
#include "oracles.hpp"

using namespace linc;

static Rational q(long long n) { return Rational(n); }

static Matrix<Rational> mat(int r, int c, std::vector<long long> v) {
  std::vector<Rational> e;
  e.reserve(v.size());
  for (long long x : v) e.push_back(Rational(x));
  return Matrix<Rational>(r, c, std::move(e));
}

TEST_CASE("rref canonical forms") {
  auto id = Matrix<Rational>::identity(3, q(0));
  auto e1 = rref(id);
  CHECK(e1.rank == 3);
  CHECK(e1.reduced == id);
  CHECK(e1.pivot_cols == std::vector<int>{0, 1, 2});

  auto z = Matrix<Rational>(2, 3, q(0));
  auto e2 = rref(z);
  CHECK(e2.rank == 0);
  CHECK(e2.pivot_cols.empty());
  CHECK(e2.reduced == z);

  auto m = mat(2, 2, {1, 2, 2, 4});
  auto e3 = rref(m);
  CHECK(e3.rank == 1);
  CHECK(e3.pivot_cols == std::vector<int>{0});
  CHECK(e3.reduced == mat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("nullspace") {
  auto id = Matrix<Rational>::identity(3, q(0));
  CHECK(nullspace(id, q(0)).empty());

  auto z = Matrix<Rational>(1, 3, q(0));
  auto nz = nullspace(z, q(0));
  REQUIRE(nz.size() == 3);
  CHECK(nz[0] == std::vector<Rational>{q(1), q(0), q(0)});
  CHECK(nz[2] == std::vector<Rational>{q(0), q(0), q(1)});

  auto m = mat(2, 2, {0, 1, 0, 0});
  auto nm = nullspace(m, q(0));
  REQUIRE(nm.size() == 1);
  CHECK(nm[0] == std::vector<Rational>{q(1), q(0)});
}

TEST_CASE("solve_linear") {
  auto id = Matrix<Rational>::identity(2, q(0));
  auto s1 = solve_linear(id, {q(3), q(-5)}, q(0));
  REQUIRE(s1.has_value());
  CHECK(s1->particular == std::vector<Rational>{q(3), q(-5)});
  CHECK(s1->kernel.empty());

  auto m = mat(1, 2, {1, 1});
  auto s2 = solve_linear(m, {q(2)}, q(0));
  REQUIRE(s2.has_value());
  CHECK(s2->particular == std::vector<Rational>{q(2), q(0)});
  REQUIRE(s2->kernel.size() == 1);
  CHECK(s2->kernel[0] == std::vector<Rational>{q(-1), q(1)});

  auto col = mat(2, 1, {1, 1});
  CHECK_FALSE(solve_linear(col, {q(1), q(2)}, q(0)).has_value());

  CHECK_THROWS_AS(solve_linear(col, {q(1)}, q(0)), std::invalid_argument);
}

TEST_CASE("determinant and inverse against oracles") {
  CHECK(determinant(mat(2, 2, {1, 2, 3, 4})) == q(-2));
  CHECK(determinant(mat(2, 2, {1, 2, 2, 4})).is_zero());

  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 4));
    auto m = random_matrix(n, n, rng, q(0));
    Rational d = determinant(m);
    CHECK(d == oracle::bareiss_det(m));
    if (n <= 4) CHECK(d == oracle::laplace_det(m));
    auto inv = inverse(m);
    CHECK(inv.has_value() == !d.is_zero());
    if (inv) {
      CHECK(m * *inv == Matrix<Rational>::identity(n, q(0)));
      CHECK(*inv * m == Matrix<Rational>::identity(n, q(0)));
    }
  }

  uint64_t p = 101;
  Fp z0 = fp_embed(0, p);
  Rng rng2(12);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng2.uniform_int(0, 4));
    auto m = random_matrix(n, n, rng2, z0);
    CHECK(determinant(m) == oracle::bareiss_det(m));
  }
}

TEST_CASE("skew matrix validation") {
  auto good = mat(2, 2, {0, 3, -3, 0});
  CHECK(SkewMatrix<Rational>::from_matrix(good)(0, 1) == q(3));

  auto bad_diag = mat(2, 2, {1, 3, -3, 0});
  CHECK_THROWS_WITH_AS(SkewMatrix<Rational>::from_matrix(bad_diag),
                       "matrix not skew-symmetric at (1,1)", std::invalid_argument);
  auto bad_off = mat(2, 2, {0, 3, 3, 0});
  CHECK_THROWS_WITH_AS(SkewMatrix<Rational>::from_matrix(bad_off),
                       "matrix not skew-symmetric at (1,2)", std::invalid_argument);

  auto up = SkewMatrix<Rational>::from_upper(3, {q(1), q(2), q(3)}, q(0));
  CHECK(up(0, 1) == q(1));
  CHECK(up(1, 0) == q(-1));
  CHECK(up(1, 2) == q(3));
  CHECK(up.upper() == std::vector<Rational>{q(1), q(2), q(3)});
}

TEST_CASE("pfaffian closed-form cases") {
  auto a2 = SkewMatrix<Rational>::from_upper(2, {q(3)}, q(0));
  CHECK(pfaffian(a2) == q(3));

  // Pf of the 4x4 with a12 = a34 = 1, all else 0, equals a12*a34 = 1.
  std::vector<Rational> u4(6, q(0));
  u4[0] = q(1);  // (0,1)
  u4[5] = q(1);  // (2,3)
  auto a4 = SkewMatrix<Rational>::from_upper(4, u4, q(0));
  CHECK(pfaffian(a4) == q(1));

  // General 4x4: Pf = a01 a23 - a02 a13 + a03 a12.
  auto a = SkewMatrix<Rational>::from_upper(
      4, {q(2), q(3), q(5), q(7), q(11), q(13)}, q(0));
  CHECK(pfaffian(a) == q(2) * q(13) - q(3) * q(11) + q(5) * q(7));
}

TEST_CASE("pfaffian squared is the determinant") {
  Rng rng(21);
  for (int n : {2, 4, 6}) {
    for (int t = 0; t < 20; ++t) {
      auto a = random_skew(n, rng, q(0));
      Rational pf = pfaffian(a);
      CHECK(pf * pf == oracle::bareiss_det(a.matrix()));
    }
  }
  Rng rng2(22);
  Fp z0 = fp_embed(0, 10007);
  for (int n : {2, 4, 6}) {
    for (int t = 0; t < 20; ++t) {
      auto a = random_skew(n, rng2, z0);
      Fp pf = pfaffian(a);
      CHECK(pf * pf == oracle::bareiss_det(a.matrix()));
    }
  }
}

TEST_CASE("sub-pfaffian vector") {
  // For 3x3 skew with upper (a,b,c) the signed sub-Pfaffians are (c,-b,a).
  auto a3 = SkewMatrix<Rational>::from_upper(3, {q(2), q(3), q(5)}, q(0));
  auto p3 = subpfaffian_vector(a3);
  CHECK(p3 == std::vector<Rational>{q(5), q(-3), q(2)});

  // Kernel identity A p = 0 for random odd sizes.
  Rng rng(31);
  for (int n : {3, 5, 7}) {
    for (int t = 0; t < 10; ++t) {
      auto a = random_skew(n, rng, q(0));
      auto p = subpfaffian_vector(a);
      auto ap = oracle::matvec(a.matrix(), p);
      for (auto& v : ap) CHECK(v.is_zero());
    }
  }
}

TEST_CASE("congruence transforms") {
  auto a = SkewMatrix<Rational>::from_upper(
      4, {q(2), q(3), q(5), q(7), q(11), q(13)}, q(0));
  auto id = Matrix<Rational>::identity(4, q(0));
  CHECK(congruence(id, a) == a);

  auto d = Matrix<Rational>::identity(4, q(0));
  d(0, 0) = q(2);
  auto c = congruence(d, a);
  CHECK(c(0, 1) == q(4));
  CHECK(c(2, 3) == q(13));

  auto sing = Matrix<Rational>(4, 4, q(0));
  CHECK_THROWS_WITH_AS(congruence(sing, a), "congruence requires an invertible matrix",
                       std::invalid_argument);
  auto small = Matrix<Rational>::identity(3, q(0));
  CHECK_THROWS_WITH_AS(congruence(small, a), "dimension mismatch in congruence",
                       std::invalid_argument);

  // Pf(g A g^T) = det(g) Pf(A) over 50 random pairs.
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    int n = 2 * (1 + static_cast<int>(rng.uniform_int(0, 2)));
    auto sk = random_skew(n, rng, q(0));
    auto g = random_invertible(n, rng, q(0));
    CHECK(pfaffian(congruence(g, sk)) == determinant(g) * pfaffian(sk));
    CHECK(rank_of(congruence(g, sk).matrix()) == rank_of(sk.matrix()));
  }
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(Matrix<Rational>(2, 2, std::vector<Rational>{q(1)}),
                  std::invalid_argument);
  auto m = mat(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(m.transpose() == mat(3, 2, {1, 4, 2, 5, 3, 6}));
  CHECK_THROWS_AS(m * m, std::invalid_argument);
  CHECK_THROWS_AS(determinant(m), std::invalid_argument);
}
