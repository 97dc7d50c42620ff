#include "permspec/psi.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "permspec/primes.hpp"
#include "permspec/sgp.hpp"

namespace permspec {

namespace {

// Pairs of vertices sharing at least one edge.  The per-prime factor
// expands as (1 - 1/p)^{|V|} S_G(1/p) = 1 - (pair count) p^{-2} + O(p^{-3}),
// so this count controls the divergent-product part split off below.
unsigned co_edged_pairs(const Hypergraph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : g.edges)
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                pairs.insert({e[i], e[j]});
    return static_cast<unsigned>(pairs.size());
}

std::vector<Int> poly_mul_small(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

struct TailConstant {
    Rat c3;  // |h(q) - 1| <= c3 * q^3 for q in (0, 1/2]
};

// h(q) = (1 - q)^{|V|} S_G(q) / (1 - q^2)^{P2} = 1 + N(q)/D(q) with N
// divisible by q^3; bound |N(q)| <= q^3 sum |N_i| 2^{3-i} and D(q) from
// below at q = 1/2.
TailConstant tail_constant(const SgRational& s, int num_vertices, unsigned p2) {
    std::vector<Int> num_f = s.num;
    for (int i = 0; i < num_vertices; ++i) num_f = poly_mul_small(num_f, {Int(1), Int(-1)});

    std::vector<Int> den_f{Int(1)};
    for (const auto& [a, c] : s.den) {
        std::vector<Int> cyclo(static_cast<size_t>(a) + 1, Int(0));
        cyclo[0] = 1;
        cyclo[a] = -1;
        for (unsigned i = 0; i < c; ++i) den_f = poly_mul_small(den_f, cyclo);
    }

    std::vector<Int> sub = den_f;
    for (unsigned i = 0; i < p2; ++i) sub = poly_mul_small(sub, {Int(1), Int(0), Int(-1)});

    size_t len = std::max(num_f.size(), sub.size());
    std::vector<Int> n(len, Int(0));
    for (size_t i = 0; i < num_f.size(); ++i) n[i] += num_f[i];
    for (size_t i = 0; i < sub.size(); ++i) n[i] -= sub[i];
    for (size_t i = 0; i < std::min<size_t>(3, n.size()); ++i)
        if (n[i] != 0) throw std::logic_error("psi_g: low-order expansion check failed");

    Rat num_bound = 0;
    for (size_t i = 3; i < n.size(); ++i)
        num_bound += Rat(abs(n[i]), pow_int(Int(2), static_cast<unsigned>(i) - 3));

    Rat den_low = 1;
    for (unsigned i = 0; i < p2; ++i) den_low *= Rat(3, 4);
    for (const auto& [a, c] : s.den) {
        Rat f(pow_int(Int(2), a) - 1, pow_int(Int(2), a));
        for (unsigned i = 0; i < c; ++i) den_low *= f;
    }
    return {num_bound / den_low};
}

PsiResult psi_compute(const Hypergraph& g, double tolerance) {
    unsigned p2 = co_edged_pairs(g);
    if (p2 == 0) return {BigFloat(1), BigFloat(0), true};

    SgRational s = s_g_symbolic(g);
    TailConstant tc = tail_constant(s, g.num_vertices, p2);
    BigFloat c3(tc.c3);

    SgRational f_rf = s;  // evaluate (1 - q)^{|V|} alongside the symbolic S
    BigFloat zeta2 = boost::math::constants::pi<BigFloat>() *
                     boost::math::constants::pi<BigFloat>() / 6;
    // Covers the accumulated 128-bit rounding of a few thousand multiplies.
    const BigFloat round_slop("1e-25");

    size_t p_count = 64;
    while (true) {
        if (p_count > (size_t(1) << 22))
            throw std::length_error("psi_g: tolerance needs more primes than the resource guard allows");
        std::vector<uint32_t> primes = prime_table(p_count);

        BigFloat main_prod = 1;
        BigFloat prod_m2 = 1;
        for (uint32_t p : primes) {
            Rat q(1, p);
            Rat fval = evaluate(f_rf, q);
            Rat one_minus_q(Int(p) - 1, Int(p));
            for (int i = 0; i < g.num_vertices; ++i) fval *= one_minus_q;
            main_prod *= BigFloat(fval);
            prod_m2 *= 1 - BigFloat(1) / (BigFloat(p) * BigFloat(p));
        }

        uint32_t p_max = primes.back();
        BigFloat p_cubed = BigFloat(p_max) * BigFloat(p_max) * BigFloat(p_max);
        if (c3 >= p_cubed) {
            p_count *= 2;
            continue;
        }
        BigFloat c3_eff = c3 / (1 - c3 / p_cubed);
        BigFloat tail_log =
            c3_eff / (4 * BigFloat(p_max - 2) * BigFloat(p_max - 2));

        BigFloat divergent = pow(zeta2 * prod_m2, -static_cast<int>(p2));
        BigFloat est = main_prod * divergent;
        BigFloat err = abs(est) * (exp(tail_log) - 1) + abs(est) * round_slop;
        if (err <= BigFloat(tolerance)) return {est, err, false};
        p_count *= 2;
    }
}

}  // namespace

PsiResult psi_g(const Hypergraph& g, double tolerance) {
    if (tolerance <= 0) throw std::invalid_argument("psi_g: tolerance must be positive");
    // No pair of vertices shares an edge: every per-prime factor is exactly
    // 1, with no need to canonicalize (these graphs can be large).
    if (co_edged_pairs(g) == 0) return {BigFloat(1), BigFloat(0), true};

    static std::mutex cache_mutex;
    static std::map<std::string, PsiResult> cache;

    std::string key = canonical_key(g);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end() &&
            (it->second.exact_one || it->second.err <= BigFloat(tolerance)))
            return it->second;
    }
    PsiResult result = psi_compute(g, tolerance);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it == cache.end() || result.err < it->second.err) cache[key] = result;
        return cache[key];
    }
}

}  // namespace permspec
