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

#include "linc/intfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace linc {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// One Pollard-Brent round on an odd composite n with polynomial x^2 + c.
// Returns a nontrivial factor or 0 if the round ran out of iterations.
mpz_class rho_round(const mpz_class& n, unsigned long c,
                    unsigned long max_iters) {
  mpz_class x = 2, y = 2, d = 1, q = 1, ys = 0;
  unsigned long iters = 0;
  const unsigned long batch = 128;
  unsigned long r = 1;
  while (d == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) {
      y = (y * y + c) % n;
    }
    unsigned long k = 0;
    while (k < r && d == 1) {
      ys = y;
      unsigned long steps = std::min(batch, r - k);
      for (unsigned long i = 0; i < steps; ++i) {
        y = (y * y + c) % n;
        mpz_class diff = x - y;
        q = q * abs(diff) % n;
      }
      mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += steps;
      iters += steps;
      if (iters > max_iters) return 0;
    }
    r *= 2;
  }
  if (d == n) {
    // Backtrack one step at a time to recover the factor the batch skipped.
    do {
      ys = (ys * ys + c) % n;
      mpz_class diff = x - ys;
      mpz_gcd(d.get_mpz_t(), mpz_class(abs(diff)).get_mpz_t(),
              n.get_mpz_t());
    } while (d == 1);
  }
  if (d == n) return 0;
  return d;
}

void factor_into(const mpz_class& n,
                 std::vector<std::pair<mpz_class, int>>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out.emplace_back(n, 1);
    return;
  }
  for (unsigned long c = 1; c < 40; ++c) {
    mpz_class d = rho_round(n, c, 2'000'000);
    if (d != 0) {
      factor_into(d, out);
      mpz_class rest = n / d;
      factor_into(rest, out);
      return;
    }
  }
  throw std::runtime_error("integer factorization beyond desk scale");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a known deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<mpz_class, int>> factor(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factor() requires n >= 1");
  std::vector<std::pair<mpz_class, int>> flat;
  mpz_class m = n;
  for (unsigned long p = 2; p < 10000; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        ++e;
      }
      flat.emplace_back(p, e);
    }
    if (m == 1) break;
  }
  if (m > 1) {
    std::vector<std::pair<mpz_class, int>> rough;
    factor_into(m, rough);
    std::sort(rough.begin(), rough.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [p, e] : rough) {
      if (!flat.empty() && flat.back().first == p) {
        flat.back().second += e;
      } else {
        flat.emplace_back(p, e);
      }
    }
  }
  return flat;
}

std::vector<mpz_class> divisors(const mpz_class& n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("divisors() requires n != 0");
  mpz_class a = abs(n);
  auto fac = factor(a);
  std::vector<mpz_class> div{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = div.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        div.push_back(div[i] * pk);
        if (div.size() > cap) {
          throw std::runtime_error("divisor enumeration beyond desk scale");
        }
      }
    }
  }
  std::sort(div.begin(), div.end());
  return div;
}

}  // namespace linc
