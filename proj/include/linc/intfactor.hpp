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

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace linc {

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

// Prime factorization of n >= 1 as (prime, exponent) pairs with primes
// ascending. Small primes are removed by trial division; remaining
// cofactors are split by Pollard's rho (Brent variant) with an iteration
// budget. Throws std::runtime_error if the budget is exhausted: inputs of
// this library stay at desk scale and never get near it.
std::vector<std::pair<mpz_class, int>> factor(const mpz_class& n);

// All positive divisors of |n| (n != 0), ascending. Throws
// std::runtime_error if there are more than `cap` divisors.
std::vector<mpz_class> divisors(const mpz_class& n, std::size_t cap = 1 << 16);

}  // namespace linc
