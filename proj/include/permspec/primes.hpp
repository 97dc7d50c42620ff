// Cached prime tables: value and 1-based index lookups (p_1 = 2).

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace permspec {

// Ensure the cached table holds at least `count` primes; returns the table.
// Growth is mutex-guarded but may reallocate: warm the table to its final
// size before entering parallel regions, then only read.
const std::vector<uint32_t>& prime_table(size_t count);

// m-th prime, 1-based: nth_prime(1) == 2.
uint32_t nth_prime(size_t m);

// 1-based index of prime p; throws std::invalid_argument if p is not prime.
size_t prime_index(uint32_t p);

// Largest m with nth_prime(m) <= x (0 if x < 2).
size_t count_primes_up_to(uint32_t x);

// Prime factorization of v as (prime, exponent) pairs, ascending.
std::vector<std::pair<uint32_t, uint32_t>> factorize(uint64_t v);

}  // namespace permspec
