#include "permspec/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace permspec {

namespace {

std::vector<uint32_t> g_primes;
std::mutex g_mutex;

// Sieve [2, bound] and replace the table.
void sieve_to(uint64_t bound) {
    std::vector<bool> comp(bound + 1, false);
    std::vector<uint32_t> out;
    for (uint64_t i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
    }
    g_primes = std::move(out);
}

void ensure_count_locked(size_t count) {
    if (g_primes.size() >= count) return;
    // p_n < n (ln n + ln ln n) for n >= 6; pad a little.
    double n = static_cast<double>(std::max<size_t>(count, 6));
    uint64_t bound = static_cast<uint64_t>(n * (std::log(n) + std::log(std::log(n))) * 1.2) + 64;
    if (bound > (1ULL << 31)) throw std::length_error("prime table request too large");
    sieve_to(bound);
    if (g_primes.size() < count) throw std::logic_error("prime bound estimate failed");
}

void ensure_value_locked(uint32_t x) {
    if (!g_primes.empty() && g_primes.back() >= x) return;
    sieve_to(static_cast<uint64_t>(x) + 64);
}

}  // namespace

const std::vector<uint32_t>& prime_table(size_t count) {
    std::lock_guard<std::mutex> lock(g_mutex);
    ensure_count_locked(count);
    return g_primes;
}

uint32_t nth_prime(size_t m) {
    if (m == 0) throw std::invalid_argument("prime index is 1-based");
    std::lock_guard<std::mutex> lock(g_mutex);
    ensure_count_locked(m);
    return g_primes[m - 1];
}

size_t prime_index(uint32_t p) {
    std::lock_guard<std::mutex> lock(g_mutex);
    ensure_value_locked(p);
    auto it = std::lower_bound(g_primes.begin(), g_primes.end(), p);
    if (it == g_primes.end() || *it != p) throw std::invalid_argument("not a prime");
    return static_cast<size_t>(it - g_primes.begin()) + 1;
}

size_t count_primes_up_to(uint32_t x) {
    if (x < 2) return 0;
    std::lock_guard<std::mutex> lock(g_mutex);
    ensure_value_locked(x);
    auto it = std::upper_bound(g_primes.begin(), g_primes.end(), x);
    return static_cast<size_t>(it - g_primes.begin());
}

std::vector<std::pair<uint32_t, uint32_t>> factorize(uint64_t v) {
    if (v == 0) throw std::invalid_argument("factorize requires v >= 1");
    std::vector<std::pair<uint32_t, uint32_t>> out;
    size_t m = 1;
    uint64_t rem = v;
    while (rem > 1) {
        uint64_t p = nth_prime(m);
        if (p * p > rem) break;
        if (rem % p == 0) {
            uint32_t e = 0;
            while (rem % p == 0) {
                rem /= p;
                ++e;
            }
            out.emplace_back(static_cast<uint32_t>(p), e);
        }
        ++m;
    }
    if (rem > 1) {
        if (rem > 0xffffffffULL) throw std::length_error("prime factor exceeds 32 bits");
        out.emplace_back(static_cast<uint32_t>(rem), 1);
    }
    return out;
}

}  // namespace permspec
