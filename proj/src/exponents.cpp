#include "permspec/exponents.hpp"

#include "permspec/primes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permspec {

ExponentMatrix factor_exponents(const std::vector<uint64_t>& values, size_t prime_cutoff) {
    ExponentMatrix out;
    out.columns.reserve(values.size());
    for (uint64_t v : values) {
        if (v == 0) throw std::invalid_argument("factor_exponents requires positive values");
        std::vector<std::pair<size_t, uint32_t>> col;
        for (const auto& [p, e] : factorize(v)) {
            size_t m = prime_index(p);
            if (m > prime_cutoff) break;  // factors ascend, the rest are larger
            col.emplace_back(m, e);
        }
        out.columns.push_back(std::move(col));
    }
    return out;
}

Int g_k(const ExponentMatrix& e) {
    if (e.columns.empty()) throw std::invalid_argument("g_k requires at least one column");
    std::map<size_t, std::pair<uint64_t, uint32_t>> acc;  // m -> (sum, max)
    for (const auto& col : e.columns) {
        for (const auto& [m, exp] : col) {
            auto& a = acc[m];
            a.first += exp;
            a.second = std::max(a.second, exp);
        }
    }
    Int g = 1;
    for (const auto& [m, sm] : acc) {
        uint64_t surplus = sm.first - sm.second;
        if (surplus > 0) g *= pow_int(nth_prime(m), static_cast<unsigned>(surplus));
    }
    return g;
}

}  // namespace permspec
