// Sparse prime-exponent matrices and the g_k prime-surplus product.

#pragma once

#include "permspec/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace permspec {

// Column i lists (m, e) pairs with e > 0, ascending in the 1-based prime
// index m, so the p-part of slot i reconstructs as prod p_m^e.
struct ExponentMatrix {
    std::vector<std::vector<std::pair<size_t, uint32_t>>> columns;
    size_t k() const { return columns.size(); }
};

// Sentinel prime-index cutoff meaning "keep every prime factor".
inline constexpr size_t kAllPrimes = static_cast<size_t>(-1);

// Exact exponent of p_m in values[i], restricted to m <= prime_cutoff.
// Values must be >= 1.
ExponentMatrix factor_exponents(const std::vector<uint64_t>& values,
                                size_t prime_cutoff = kAllPrimes);

// prod_m p_m^(e_{m,1}+...+e_{m,k} - max_i e_{m,i}); needs k >= 1 columns.
// On full factorizations this equals (prod values) / lcm(values).
Int g_k(const ExponentMatrix& e);

}  // namespace permspec
