#include "permspec/limitproc.hpp"

#include "permspec/primes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace permspec {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a modulo m, gcd(a, m) = 1; extended Euclid.
uint64_t invmod(uint64_t a, uint64_t m) {
    if (m == 1) return 0;
    int64_t t_prev = 0, t_cur = 1;
    int64_t r_prev = static_cast<int64_t>(m), r_cur = static_cast<int64_t>(a % m);
    while (r_cur != 0) {
        int64_t q = r_prev / r_cur;
        int64_t tmp = t_prev - q * t_cur;
        t_prev = t_cur;
        t_cur = tmp;
        tmp = r_prev - q * r_cur;
        r_prev = r_cur;
        r_cur = tmp;
    }
    assert(r_prev == 1);
    if (t_prev < 0) t_prev += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t_prev);
}

uint64_t mul_checked(uint64_t a, uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > UINT64_MAX) throw std::overflow_error("64-bit multiplicity overflow");
    return static_cast<uint64_t>(r);
}

uint64_t ipow_checked(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (; exp; --exp) r = mul_checked(r, base);
    return r;
}

uint64_t factorial_u64(unsigned k) {
    uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

// One stick: U with density theta (1-x)^(theta-1) by inverse CDF, clamped
// away from {0,1} so sticks and residual stay strictly positive.
void append_stick(StickSample& s, double theta, Rng& rng) {
    double u = 1.0 - std::pow(rng.uniform01(), 1.0 / theta);
    u = std::min(std::max(u, 1e-300), 1.0 - 1e-16);
    s.sticks.push_back(s.residual * u);
    s.residual *= 1.0 - u;
}

}  // namespace

StickSample sample_gem(double theta, size_t r, Rng& rng) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (r < 1) throw std::invalid_argument("need at least one stick");
    StickSample out;
    out.theta = theta;
    out.sticks.reserve(r);
    for (size_t j = 0; j < r; ++j) append_stick(out, theta, rng);
    return out;
}

StickSample sample_gem_adaptive(double theta, double eps_residual, size_t r_cap, Rng& rng) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(eps_residual > 0.0 && eps_residual < 1.0))
        throw std::invalid_argument("eps_residual must lie in (0,1)");
    if (r_cap < 1) throw std::invalid_argument("r cap must be >= 1");
    StickSample out;
    out.theta = theta;
    while (out.residual >= eps_residual) {
        if (out.sticks.size() == r_cap)
            throw TruncationTooSmall("residual stick mass still above eps_residual at the stick cap; raise --r");
        append_stick(out, theta, rng);
    }
    return out;
}

double pd_largest_density(double theta, double x) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(x > 0.5 && x < 1.0))
        throw std::domain_error("largest-part density formula is valid only on (1/2, 1)");
    return theta * std::pow(1.0 - x, theta - 1.0) / x;
}

SkipTable build_skip_table(size_t r_cap, size_t prime_cutoff) {
    if (r_cap < 1) throw std::invalid_argument("r cap must be >= 1");
    if (prime_cutoff < 1) throw std::invalid_argument("prime cutoff must be >= 1");
    SkipTable t;
    t.r_cap = r_cap;
    t.prime_cutoff = prime_cutoff;
    t.primes = prime_table(prime_cutoff);  // detach a copy for lock-free reads
    t.primes.resize(prime_cutoff);
    t.cum_hazard.resize(prime_cutoff);
    t.beta.resize(prime_cutoff);
    double cum = 0.0;
    for (size_t i = 0; i < prime_cutoff; ++i) {
        double hazard = -static_cast<double>(r_cap) * std::log1p(-1.0 / t.primes[i]);
        cum += hazard;
        t.cum_hazard[i] = cum;
        t.beta[i] = -std::expm1(-hazard);
    }
    // sum_{p > p_L} p^-2 < 2 / (p_L ln p_L), times the number of column pairs.
    const double pl = t.primes.back();
    t.tail_risk = 0.5 * static_cast<double>(r_cap) * static_cast<double>(r_cap - 1) * 2.0 /
                  (pl * std::log(pl));
    return t;
}

PrimeExponentArray sample_prime_exponents(const SkipTable& table, size_t r, Rng& rng) {
    if (r > table.r_cap) throw std::invalid_argument("r exceeds the skip table's r_cap");
    PrimeExponentArray out;
    out.prime_cutoff = table.prime_cutoff;
    out.columns.assign(r, {});
    std::vector<uint32_t> mark(table.r_cap + 1, 0);
    uint32_t epoch = 0;
    std::vector<uint32_t> cols;
    double haz = 0.0;
    size_t pos = 0;
    for (;;) {
        haz += -std::log(1.0 - rng.uniform01());
        auto it = std::lower_bound(table.cum_hazard.begin() + pos, table.cum_hazard.end(), haz);
        if (it == table.cum_hazard.end()) break;
        const size_t idx = static_cast<size_t>(it - table.cum_hazard.begin());
        haz = table.cum_hazard[idx];
        pos = idx + 1;
        const double p = table.primes[idx];
        const double inv_p = 1.0 / p;

        // Hit count N ~ Binomial(r_cap, 1/p) conditioned on N >= 1, by an
        // inverse-CDF walk on the pmf ratio (r-N)/((N+1)(p-1)).
        const double target = rng.uniform01() * table.beta[idx];
        double pmf = static_cast<double>(table.r_cap) * inv_p *
                     std::pow(1.0 - inv_p, static_cast<double>(table.r_cap - 1));
        double cum = pmf;
        size_t n_hits = 1;
        while (cum < target && n_hits < table.r_cap) {
            pmf *= static_cast<double>(table.r_cap - n_hits) /
                   (static_cast<double>(n_hits + 1) * (p - 1.0));
            ++n_hits;
            cum += pmf;
        }

        // The hit columns: a uniform n_hits-subset of {1..r_cap} (Floyd).
        ++epoch;
        cols.clear();
        for (size_t t2 = table.r_cap - n_hits + 1; t2 <= table.r_cap; ++t2) {
            uint32_t x = static_cast<uint32_t>(rng.below(t2)) + 1;
            uint32_t chosen = (mark[x] == epoch) ? static_cast<uint32_t>(t2) : x;
            mark[chosen] = epoch;
            cols.push_back(chosen);
        }
        std::sort(cols.begin(), cols.end());

        // Exponent at each hit: P{X = a | X >= 1} = (1 - 1/p) p^{-(a-1)}.
        // Columns beyond r are drawn and discarded, keeping the stream
        // layout independent of r.
        for (uint32_t c : cols) {
            uint32_t x = 1;
            while (rng.uniform01() < inv_p) ++x;
            if (c <= r) out.columns[c - 1].emplace_back(static_cast<uint32_t>(idx + 1), x);
        }
    }
    return out;
}

LimitSimulator::LimitSimulator(const LimitParams& params) : params_(params) {
    const auto& P = params_;
    if (P.k < 1) throw std::invalid_argument("k must be >= 1");
    if (P.k > 20) throw std::invalid_argument("k too large for 64-bit multiplicities");
    if (!(P.theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(P.window_lo < P.window_hi)) throw std::invalid_argument("window must be nonempty");
    if (P.trunc.r_cap < static_cast<size_t>(P.k))
        throw std::invalid_argument("stick cap must be at least k");
    if (omitted_intensity_bound() > P.trunc.bias_tol)
        throw TruncationTooSmall("omitted-intensity bound exceeds bias_tol; lower eps_residual");
    if (P.t >= (uint64_t(1) << 62)) throw std::invalid_argument("t too large");
    if (P.t >= 2) {
        auto factors = factorize(P.t);
        m_low_ = prime_index(factors.back().first);
        if (m_low_ > P.trunc.prime_cutoff)
            throw std::invalid_argument("prime cutoff below the largest prime factor of t");
    }
    need_primes_ = P.k >= 2 || P.t >= 2;
    if (need_primes_) table_ = build_skip_table(P.trunc.r_cap, P.trunc.prime_cutoff);
}

double LimitSimulator::omitted_intensity_bound() const {
    const double w = params_.window_hi - params_.window_lo;
    const double k = static_cast<double>(params_.k);
    return k * k * w * params_.trunc.eps_residual;
}

LimitWindowSample LimitSimulator::replicate(Rng& rng) const {
    const auto& P = params_;
    StickSample gem = sample_gem_adaptive(P.theta, P.trunc.eps_residual, P.trunc.r_cap, rng);
    const size_t r = gem.sticks.size();

    PrimeExponentArray X;
    if (need_primes_) X = sample_prime_exponents(table_, r, rng);

    std::vector<uint64_t> units;  // rational kind: U_i uniform on (Z/tZ)^x
    if (P.t >= 1) {
        units.resize(r);
        for (size_t i = 0; i < r; ++i) {
            uint64_t u;
            do u = rng.below(P.t) + 1;
            while (std::gcd(u, P.t) != 1);
            units[i] = u;
        }
    }

    LimitWindowSample out;
    out.r_used = r;
    out.atom_at_zero = P.t >= 1;
    const size_t k = static_cast<size_t>(P.k);
    if (r < k) return out;

    const uint64_t kfact = factorial_u64(static_cast<unsigned>(k));
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::vector<std::pair<uint32_t, uint32_t>> merged;
    for (;;) {
        double prod_l = 1.0;
        for (size_t u : idx) prod_l *= gem.sticks[u];

        // Merge the subset's exponent columns: g_k from every prime surplus,
        // and for the rational kind the mod-t pieces of the V formula
        // V = [prod_{m <= M} p_m^max] [prod_{m > M} p_m^(sum-max)]^-1 prod U.
        uint64_t g_full = 1, g_low = 1, num_low = 1 % std::max<uint64_t>(P.t, 1);
        if (need_primes_) {
            merged.clear();
            for (size_t u : idx)
                merged.insert(merged.end(), X.columns[u].begin(), X.columns[u].end());
            std::sort(merged.begin(), merged.end());
            size_t a = 0;
            while (a < merged.size()) {
                const uint32_t m = merged[a].first;
                uint64_t sum = 0;
                uint32_t mx = 0;
                size_t b = a;
                for (; b < merged.size() && merged[b].first == m; ++b) {
                    sum += merged[b].second;
                    mx = std::max(mx, merged[b].second);
                }
                const uint64_t p = table_.primes[m - 1];
                if (sum > mx) {
                    uint64_t surplus = ipow_checked(p, sum - mx);
                    g_full = mul_checked(g_full, surplus);
                    if (m <= m_low_) g_low = mul_checked(g_low, surplus);
                }
                if (P.t >= 2 && m <= m_low_) num_low = mulmod(num_low, powmod(p, mx, P.t), P.t);
                a = b;
            }
        }

        double u_off;
        int64_t v_num = -1;
        if (P.t == 0) {
            u_off = rng.uniform01();
        } else {
            uint64_t v = num_low;
            if (P.t >= 2) v = mulmod(v, invmod((g_full / g_low) % P.t, P.t), P.t);
            for (size_t u : idx) v = mulmod(v, units[u], P.t);
            if (v == 0) v = P.t;
            v_num = static_cast<int64_t>(v);
            u_off = static_cast<double>(v) / static_cast<double>(P.t);
        }

        const double spacing = static_cast<double>(g_full) / prod_l;
        const uint64_t mult = mul_checked(kfact, g_full);
        const long long q_lo = static_cast<long long>(std::ceil(P.window_lo / spacing - u_off));
        const long long q_hi = static_cast<long long>(std::floor(P.window_hi / spacing - u_off));
        for (long long q = q_lo; q <= q_hi; ++q) {
            if (v_num >= 0 && q * static_cast<long long>(P.t) + v_num == 0) continue;  // atom at 0
            double posn = (static_cast<double>(q) + u_off) * spacing;
            if (posn < P.window_lo || posn > P.window_hi) continue;
            out.points.push_back({posn, mult});
        }

        size_t j = k;
        while (j > 0 && idx[j - 1] == r - k + (j - 1)) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (size_t j2 = j; j2 < k; ++j2) idx[j2] = idx[j2 - 1] + 1;
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const LimitPoint& a, const LimitPoint& b) { return a.position < b.position; });
    return out;
}

LimitWindowSample simulate_limit_window(const LimitParams& params, Rng& rng) {
    return LimitSimulator(params).replicate(rng);
}

}  // namespace permspec
