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
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "linc/errors.hpp"
#include "linc/matrix.hpp"

namespace linc {

// Point of the projective line P^1 over K, stored in canonical form: the
// first nonzero coordinate is 1.
template <exact_field K>
class PointP1 {
 public:
  PointP1(const K& b0, const K& b1) : b0_(b0), b1_(b1) {
    if (!b0_.is_zero()) {
      K s = b0_.inv();
      b0_ = b0_.one();
      b1_ = b1_ * s;
    } else if (!b1_.is_zero()) {
      b1_ = b1_.one();
    } else {
      throw std::invalid_argument("(0,0) does not define a projective point");
    }
  }

  const K& c0() const { return b0_; }
  const K& c1() const { return b1_; }

  bool operator==(const PointP1& o) const { return b0_ == o.b0_ && b1_ == o.b1_; }
  bool operator!=(const PointP1& o) const { return !(*this == o); }

  std::string str() const { return "[" + b0_.str() + ":" + b1_.str() + "]"; }

 private:
  K b0_, b1_;
};

// Homogeneous binary form of degree d in (y0, y1): coeffs[i] multiplies
// y0^(d-i) * y1^i. The zero form of each degree is representable; forms of
// different degrees never mix in + or -.
template <exact_field K>
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("form needs at least one coefficient");
  }

  static BinaryForm zero_of_degree(int d, const K& exemplar) {
    if (d < 0) throw std::invalid_argument("negative degree");
    return BinaryForm(std::vector<K>(d + 1, exemplar.zero()));
  }

  // c * y0^(d - y1_exp) * y1^(y1_exp)
  static BinaryForm monomial(int d, int y1_exp, const K& c) {
    if (y1_exp < 0 || y1_exp > d) throw std::invalid_argument("monomial exponent out of range");
    BinaryForm f = zero_of_degree(d, c);
    f.c_[y1_exp] = c;
    return f;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](int i) const { return c_[i]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const K& x) { return x.is_zero(); });
  }

  // Index of the first nonzero coefficient, or -1 for the zero form.
  int first_nonzero() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
  }

  BinaryForm operator+(const BinaryForm& o) const {
    require_same_degree(o);
    std::vector<K> r = c_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.c_[i];
    return BinaryForm(std::move(r));
  }

  BinaryForm operator-(const BinaryForm& o) const {
    require_same_degree(o);
    std::vector<K> r = c_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - o.c_[i];
    return BinaryForm(std::move(r));
  }

  BinaryForm operator-() const {
    std::vector<K> r = c_;
    for (auto& x : r) x = -x;
    return BinaryForm(std::move(r));
  }

  BinaryForm operator*(const BinaryForm& o) const {
    const K& ex = c_[0];
    int d = degree() + o.degree();
    if (is_zero() || o.is_zero()) return zero_of_degree(d, ex);
    std::vector<K> r(static_cast<std::size_t>(d) + 1, ex.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
      }
    }
    return BinaryForm(std::move(r));
  }

  BinaryForm scale(const K& s) const {
    std::vector<K> r = c_;
    for (auto& x : r) x = x * s;
    return BinaryForm(std::move(r));
  }

  K eval(const K& b0, const K& b1) const {
    const int d = degree();
    // Powers of b0 descending meet powers of b1 ascending.
    std::vector<K> p0(d + 1, b0.one());
    std::vector<K> p1(d + 1, b0.one());
    for (int i = 1; i <= d; ++i) {
      p0[i] = p0[i - 1] * b0;
      p1[i] = p1[i - 1] * b1;
    }
    K acc = c_[0] * p0[d];
    for (int i = 1; i <= d; ++i) acc = acc + c_[i] * p0[d - i] * p1[i];
    return acc;
  }

  K eval_at(const PointP1<K>& p) const { return eval(p.c0(), p.c1()); }

  // Scales so the first nonzero coefficient becomes 1; the zero form is
  // returned unchanged.
  BinaryForm normalized() const {
    int i = first_nonzero();
    if (i < 0) return *this;
    return scale(c_[i].inv());
  }

  bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  std::string str() const {
    const int d = degree();
    std::string out;
    for (int i = 0; i <= d; ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].str() + ")";
      if (d - i > 0) out += "*y0^" + std::to_string(d - i);
      if (i > 0) out += "*y1^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same_degree(const BinaryForm& o) const {
    if (degree() != o.degree()) {
      throw std::invalid_argument("degree mismatch");
    }
  }

  std::vector<K> c_;
};

template <exact_field K>
BinaryForm<K> operator*(const K& s, const BinaryForm<K>& f) {
  return f.scale(s);
}

// ---------------------------------------------------------------------------
// Roots on P^1.
// ---------------------------------------------------------------------------

template <exact_field K>
struct RootList {
  // (point, multiplicity), sorted by canonical point text.
  std::vector<std::pair<PointP1<K>, int>> roots;
  // K-irreducible part of degree >= 2 left after removing all K-roots
  // (constant 1 when the form splits over K).
  BinaryForm<K> remainder;
};

namespace detail {

// Evaluates a univariate polynomial (ascending coefficients) by Horner.
template <exact_field K>
K horner(const std::vector<K>& u, const K& t) {
  K acc = u.back();
  for (std::size_t i = u.size() - 1; i-- > 0;) acc = acc * t + u[i];
  return acc;
}

// Divides u (ascending) by (t - t0). Returns the quotient if the division
// is exact, nullopt otherwise.
template <exact_field K>
std::optional<std::vector<K>> deflate(const std::vector<K>& u, const K& t0) {
  std::vector<K> q(u.size() - 1, u[0].zero());
  K carry = u.back();
  for (std::size_t i = u.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = u[i] + carry * t0;
  }
  if (!carry.is_zero()) return std::nullopt;
  return q;
}

// All roots in Q of a rational-coefficient polynomial (ascending, nonzero
// constant and leading coefficients), with multiplicity, by the rational
// root test on the primitive integer model: candidates are +/- r/s with
// r | constant, s | leading, gcd(r, s) = 1, confirmed by exact evaluation
// and removed by exact deflation.
inline std::vector<std::pair<Rational, int>> rational_roots(
    std::vector<Rational> u) {
  std::vector<std::pair<Rational, int>> out;
  while (u.size() >= 2) {
    if (u.size() == 2) {
      out.emplace_back(-(u[0] / u[1]), 1);
      u = {u[1]};
      break;
    }
    // Primitive integer model.
    mpz_class lcm_den = 1;
    for (const auto& c : u) {
      mpz_class d = c.den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
      lcm_den = lcm_den / g * d;
    }
    std::vector<mpz_class> P;
    P.reserve(u.size());
    for (const auto& c : u) {
      mpz_class v = c.num() * (lcm_den / c.den());
      P.push_back(v);
    }
    std::vector<mpz_class> rs = divisors(P.front());
    std::vector<mpz_class> ss = divisors(P.back());
    bool found = false;
    for (const mpz_class& s : ss) {
      for (const mpz_class& r : rs) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
        if (g != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
          Rational t0(sign == 0 ? r : mpz_class(-r), s);
          if (!horner(u, t0).is_zero()) continue;
          int mult = 0;
          while (true) {
            auto q = deflate(u, t0);
            if (!q.has_value()) break;
            u = std::move(*q);
            ++mult;
            if (u.size() == 1) break;
            if (!horner(u, t0).is_zero()) break;
          }
          out.emplace_back(t0, mult);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;  // no rational root remains
  }
  return out;
}

// All roots in Fp by exhaustive scan; p must stay at desk scale.
inline std::vector<std::pair<Fp, int>> prime_field_roots(std::vector<Fp> u) {
  std::uint64_t p = Fp(0, 0).modulus();
  for (const auto& c : u) {
    if (c.modulus() != 0) {
      p = c.modulus();
      break;
    }
  }
  if (p == 0) throw std::logic_error("roots over Fp need a bound modulus");
  if (p > 10'000'000ULL) {
    throw std::runtime_error("root scan beyond desk scale for this modulus");
  }
  std::vector<std::pair<Fp, int>> out;
  for (std::uint64_t t = 0; t < p && u.size() >= 2; ++t) {
    Fp t0(t, p);
    if (!horner(u, t0).is_zero()) continue;
    int mult = 0;
    while (u.size() >= 2) {
      auto q = deflate(u, t0);
      if (!q.has_value()) break;
      u = std::move(*q);
      ++mult;
    }
    out.emplace_back(t0, mult);
  }
  return out;
}

}  // namespace detail

// Zeros of f on P^1(K) with multiplicities, plus the K-irreducible
// remainder. The [1:0] and [0:1] zeros are read off the coefficient
// pattern; affine zeros come from the dehomogenized polynomial in
// t = y1/y0. Supported base fields: Rational and Fp.
template <exact_field K>
RootList<K> roots(const BinaryForm<K>& f) {
  static_assert(std::is_same_v<K, Rational> || std::is_same_v<K, Fp>,
                "root finding is implemented for Q and Fp");
  if (f.is_zero()) throw std::invalid_argument("zero form has no root set");
  const auto& c = f.coeffs();
  const int d = f.degree();
  const K ex = c[f.first_nonzero()];

  // y1^b divides f iff the low-index coefficients vanish: zero [1:0].
  int b = 0;
  while (c[b].is_zero()) ++b;
  // y0^a divides f iff the high-index coefficients vanish: zero [0:1].
  int a = 0;
  while (c[d - a].is_zero()) ++a;

  std::vector<K> u(c.begin() + b, c.begin() + (d - a) + 1);

  std::vector<std::pair<PointP1<K>, int>> pts;
  if (a > 0) pts.emplace_back(PointP1<K>(ex.zero(), ex.one()), a);
  if (b > 0) pts.emplace_back(PointP1<K>(ex.one(), ex.zero()), b);

  std::vector<std::pair<K, int>> affine;
  if constexpr (std::is_same_v<K, Rational>) {
    affine = detail::rational_roots(u);
  } else {
    affine = detail::prime_field_roots(u);
  }
  for (const auto& [t0, m] : affine) {
    pts.emplace_back(PointP1<K>(ex.one(), t0), m);
    for (int k = 0; k < m; ++k) u = *detail::deflate(u, t0);
  }

  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    return x.first.str() < y.first.str();
  });

  // Rehomogenized remainder, normalized so its first nonzero coefficient
  // is 1 (the constant form 1 exactly when f splits over K).
  BinaryForm<K> rem = BinaryForm<K>(std::move(u)).normalized();
  return RootList<K>{std::move(pts), std::move(rem)};
}

// Greatest common divisor of two binary forms, not both zero. The result
// is canonical: shared powers of y0 and y1 carry coefficient 1 and the
// dehomogenized common factor is monic in t = y1/y0.
template <exact_field K>
BinaryForm<K> gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  if (f.is_zero() && g.is_zero()) {
    throw std::invalid_argument("gcd of two zero forms");
  }
  auto canonical = [](const BinaryForm<K>& h) {
    const auto& c = h.coeffs();
    const int d = h.degree();
    int b = 0;
    while (c[b].is_zero()) ++b;
    int a = 0;
    while (c[d - a].is_zero()) ++a;
    std::vector<K> u(c.begin() + b, c.begin() + (d - a) + 1);
    K lead_inv = u.back().inv();
    for (auto& x : u) x = x * lead_inv;
    // reassemble y0^a y1^b * monic core
    std::vector<K> out(static_cast<std::size_t>(d) + 1, c[0].zero());
    for (std::size_t i = 0; i < u.size(); ++i) out[b + i] = u[i];
    return BinaryForm<K>(std::move(out));
  };
  if (f.is_zero()) return canonical(g);
  if (g.is_zero()) return canonical(f);

  auto split = [](const BinaryForm<K>& h, int& a, int& b) {
    const auto& c = h.coeffs();
    const int d = h.degree();
    b = 0;
    while (c[b].is_zero()) ++b;
    a = 0;
    while (c[d - a].is_zero()) ++a;
    return std::vector<K>(c.begin() + b, c.begin() + (d - a) + 1);
  };
  int af, bf, ag, bg;
  std::vector<K> uf = split(f, af, bf);
  std::vector<K> ug = split(g, ag, bg);

  // Euclid on the cores. Polynomials are ascending coefficient vectors,
  // never empty; degree 0 with value 0 is the zero polynomial.
  auto strip = [](std::vector<K>& u) {
    while (u.size() > 1 && u.back().is_zero()) u.pop_back();
  };
  auto is_zero_poly = [](const std::vector<K>& u) {
    return u.size() == 1 && u[0].is_zero();
  };
  auto poly_mod = [&](std::vector<K> r, const std::vector<K>& m) {
    K lead_inv = m.back().inv();
    strip(r);
    while (r.size() >= m.size() && !is_zero_poly(r)) {
      K q = r.back() * lead_inv;
      std::size_t off = r.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        r[off + i] = r[off + i] - q * m[i];
      }
      r.pop_back();
      if (r.empty()) r.push_back(q.zero());
      strip(r);
    }
    return r;
  };
  std::vector<K> x = std::move(uf), y = std::move(ug);
  while (!is_zero_poly(y)) {
    std::vector<K> r = poly_mod(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  K lead_inv = x.back().inv();
  for (auto& v : x) v = v * lead_inv;

  int a = std::min(af, ag), b = std::min(bf, bg);
  std::vector<K> out(x.size() + a + b, x[0].zero());
  for (std::size_t i = 0; i < x.size(); ++i) out[b + i] = x[i];
  return BinaryForm<K>(std::move(out));
}

// Rank of the (forms x coefficients) matrix of a family of equal-degree
// forms; this is the dimension of their linear span.
template <exact_field K>
int coeff_matrix_rank(const std::vector<BinaryForm<K>>& forms) {
  if (forms.empty()) throw std::invalid_argument("empty family of forms");
  const int d = forms[0].degree();
  for (const auto& f : forms) {
    if (f.degree() != d) throw std::invalid_argument("mixed degrees in family");
  }
  const K ex = forms[0].coeffs()[0];
  Matrix<K> m(static_cast<int>(forms.size()), d + 1, ex.zero());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (int j = 0; j <= d; ++j) m(static_cast<int>(i), j) = forms[i][j];
  }
  return rank_of(m);
}

}  // namespace linc
