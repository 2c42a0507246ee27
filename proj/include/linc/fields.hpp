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

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "linc/intfactor.hpp"

namespace linc {

// Exact field scalar. The interface is exemplar-based: zero(), one() and
// from_int() are member functions so that scalars carrying runtime context
// (the prime of Fp) can mint constants of the right field. Algorithms in
// this library never construct scalars out of thin air; they derive them
// from an element already at hand.
template <typename K>
concept exact_field = requires(const K& a, const K& b, long long n) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inv() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<K>;
  { a.one() } -> std::convertible_to<K>;
  { a.from_int(n) } -> std::convertible_to<K>;
  { a.str() } -> std::convertible_to<std::string>;
};

// ---------------------------------------------------------------------------
// Rational numbers, always held in lowest terms with positive denominator.
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() : q_(0) {}

  explicit Rational(long long n) : q_(static_cast<long>(n)) {}

  // num/den reduced to canonical form; den == 0 is rejected.
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "a" or "a/b" with optional leading '-' on either part.
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& part) {
      if (part.empty()) return false;
      std::size_t i = (part[0] == '-') ? 1 : 0;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') return false;
      }
      return true;
    };
    if (slash == std::string::npos) {
      if (!digits_ok(s)) throw std::invalid_argument("bad rational literal: " + s);
      return Rational(mpz_class(s), 1);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
    return Rational(mpz_class(num), mpz_class(den));
  }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.q_ == 0) throw std::domain_error("division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  Rational inv() const {
    if (q_ == 0) throw std::domain_error("division by zero");
    return Rational(mpq_class(1 / q_));
  }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }

  // Exemplar interface (context-free for Q).
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  // Canonical text form: "a/b" in lowest terms, positive denominator.
  std::string str() const {
    mpz_class n = q_.get_num(), d = q_.get_den();
    return n.get_str() + "/" + d.get_str();
  }

 private:
  mpq_class q_;
};

// ---------------------------------------------------------------------------
// Prime field Fp for a word-size prime p < 2^63.
//
// An element carries its modulus. The default-constructed element is an
// "unbound zero" (p == 0): it acts as the zero of whichever field the other
// operand belongs to. Arithmetic between elements of two different bound
// moduli is a usage error and throws.
// ---------------------------------------------------------------------------

class Fp {
 public:
  Fp() : v_(0), p_(0) {}

  // Caller guarantees p is prime (use fp_embed / fp_zero to validate).
  Fp(std::uint64_t v, std::uint64_t p) : v_(v), p_(p) {
    if (p != 0 && v >= p) v_ = v % p;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const {
    std::uint64_t p = joint_modulus(o);
    if (p == 0) return Fp();
    std::uint64_t s = v_ + o.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }

  Fp operator-(const Fp& o) const {
    std::uint64_t p = joint_modulus(o);
    if (p == 0) return Fp();
    std::uint64_t s = v_ + p - o.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }

  Fp operator*(const Fp& o) const {
    std::uint64_t p = joint_modulus(o);
    if (p == 0) return Fp();
    return Fp(static_cast<std::uint64_t>(
                  static_cast<unsigned __int128>(v_) * o.v_ % p),
              p);
  }

  Fp operator/(const Fp& o) const { return *this * o.inv(); }

  Fp operator-() const {
    if (p_ == 0) return Fp();
    return Fp(v_ == 0 ? 0 : p_ - v_, p_);
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("division by zero");
    // Extended Euclid on (v, p); v is a unit because p is prime.
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_);
    long long new_r = static_cast<long long>(v_);
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return p_ != 0 && v_ == 1; }

  bool operator==(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return false;
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  // Exemplar interface; requires a bound element for one()/from_int().
  Fp zero() const { return Fp(0, p_); }
  Fp one() const {
    require_bound();
    return Fp(1, p_);
  }
  Fp from_int(long long n) const {
    require_bound();
    long long p = static_cast<long long>(p_);
    long long r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), p_);
  }

  std::string str() const {
    require_bound();
    return std::to_string(v_) + " mod " + std::to_string(p_);
  }

 private:
  void require_bound() const {
    if (p_ == 0) {
      throw std::logic_error("operation requires an element with a modulus");
    }
  }

  std::uint64_t joint_modulus(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) {
      throw std::invalid_argument("elements from different prime fields");
    }
    return p_ != 0 ? p_ : o.p_;
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

// Embeds the integer x into Fp, validating that p is a word-size prime.
inline Fp fp_embed(long long x, std::uint64_t p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p)) {
    throw std::invalid_argument("modulus is not a word-size prime");
  }
  return Fp(0, p).from_int(x);
}

static_assert(exact_field<Rational>);
static_assert(exact_field<Fp>);

}  // namespace linc
