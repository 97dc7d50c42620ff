#include "permspec/gapmc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "permspec/parallel.hpp"

namespace permspec {

namespace {

constexpr std::uint64_t kChunkReps = 1024;

// g_k of the chosen columns: product over shared primes of
// p^(sum of exponents - largest exponent).  Columns are sparse and sorted
// by prime index, so a flat merge suffices.  Prime values come from the
// skip table's local copy to keep the hot loop lock-free.
double subset_g(const PrimeExponentArray& arr, const std::vector<uint32_t>& primes,
                const std::vector<size_t>& subset,
                std::vector<std::pair<uint32_t, uint32_t>>& scratch) {
    scratch.clear();
    for (size_t i : subset) {
        const auto& col = arr.columns[i];
        scratch.insert(scratch.end(), col.begin(), col.end());
    }
    if (scratch.size() < 2) return 1.0;
    std::sort(scratch.begin(), scratch.end());
    double g = 1.0;
    size_t a = 0;
    while (a < scratch.size()) {
        size_t b = a;
        uint32_t sum = 0, mx = 0;
        while (b < scratch.size() && scratch[b].first == scratch[a].first) {
            sum += scratch[b].second;
            mx = std::max(mx, scratch[b].second);
            ++b;
        }
        if (sum > mx) {
            double p = static_cast<double>(primes[scratch[a].first - 1]);
            for (uint32_t e = mx; e < sum; ++e) g *= p;
        }
        a = b;
    }
    return g;
}

double replicate_product(int k, double width, const StickSample& sticks,
                         const PrimeExponentArray* arr, const SkipTable& table,
                         std::vector<size_t>& subset,
                         std::vector<std::pair<uint32_t, uint32_t>>& scratch) {
    size_t r = sticks.sticks.size();
    if (static_cast<size_t>(k) > r) return 1.0;

    subset.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = static_cast<size_t>(i);

    double product = 1.0;
    while (true) {
        double prod_l = 1.0;
        for (size_t i : subset) prod_l *= sticks.sticks[i];
        double g = arr ? subset_g(*arr, table.primes, subset, scratch) : 1.0;
        double occupied = width * prod_l / g;
        product *= occupied >= 1.0 ? 0.0 : 1.0 - occupied;
        if (product == 0.0) return 0.0;

        int pos = k - 1;
        while (pos >= 0 &&
               subset[static_cast<size_t>(pos)] == r - static_cast<size_t>(k - pos))
            --pos;
        if (pos < 0) break;
        ++subset[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
    return product;
}

}  // namespace

GapEstimate gap_mc(int k, double theta, double y1, double y2,
                   const TruncationParams& trunc, std::uint64_t reps,
                   std::uint64_t seed, std::size_t threads) {
    if (k < 1 || k > 20) throw std::invalid_argument("gap_mc: k out of range");
    if (theta <= 0) throw std::invalid_argument("gap_mc: theta must be positive");
    if (y2 < y1) throw std::invalid_argument("gap_mc: empty interval");
    if (reps == 0) throw std::invalid_argument("gap_mc: need at least one replicate");
    if (trunc.r_cap < static_cast<size_t>(k))
        throw std::invalid_argument("gap_mc: stick cap below k");

    double width = y2 - y1;
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    double bias = width * k * trunc.eps_residual / fact;
    if (bias > trunc.bias_tol)
        throw TruncationTooSmall("gap_mc: truncation bias bound exceeds tolerance");
    if (width == 0.0) return {1.0, 0.0, 0.0, reps};

    SkipTable table;
    if (k >= 2) table = build_skip_table(trunc.r_cap, trunc.prime_cutoff);

    std::uint64_t n_chunks = (reps + kChunkReps - 1) / kChunkReps;
    std::vector<double> chunk_sum(n_chunks, 0.0), chunk_sumsq(n_chunks, 0.0);

    auto run_chunk = [&](std::size_t c) {
        std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunkReps;
        std::uint64_t hi = std::min(reps, lo + kChunkReps);
        std::vector<size_t> subset;
        std::vector<std::pair<uint32_t, uint32_t>> scratch;
        double sum = 0.0, sumsq = 0.0;
        for (std::uint64_t rep = lo; rep < hi; ++rep) {
            Rng rng = Rng::for_replicate(seed, rep);
            StickSample sticks =
                sample_gem_adaptive(theta, trunc.eps_residual, trunc.r_cap, rng);
            PrimeExponentArray arr;
            if (k >= 2) arr = sample_prime_exponents(table, sticks.sticks.size(), rng);
            double v = replicate_product(k, width, sticks, k >= 2 ? &arr : nullptr,
                                         table, subset, scratch);
            sum += v;
            sumsq += v * v;
        }
        chunk_sum[c] = sum;
        chunk_sumsq[c] = sumsq;
    };

    std::size_t workers = threads == 0 ? thread_cap() : threads;
    run_chunks(static_cast<std::size_t>(n_chunks), workers, run_chunk);

    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        sum += chunk_sum[c];
        sumsq += chunk_sumsq[c];
    }
    double n = static_cast<double>(reps);
    double mean = sum / n;
    double se = 0.0;
    if (reps > 1) {
        double var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
        se = std::sqrt(var / n);
    }
    return {mean, se, bias, reps};
}

}  // namespace permspec
