#include "permspec/converge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "permspec/ewens.hpp"
#include "permspec/parallel.hpp"
#include "permspec/spectrum.hpp"
#include "permspec/stats.hpp"

namespace permspec {

namespace {

constexpr std::uint64_t kChunkReps = 256;

// Stage-local master seed: keeps the finite-n streams and the limit stream
// disjoint while remaining reproducible from the single user seed.
std::uint64_t stage_master(std::uint64_t seed, std::uint64_t tag) {
    return fmix64(seed ^ (tag * 0xd1b54a32d192ed03ULL));
}

using Histogram = std::map<long, double>;

void merge_into(Histogram& into, const Histogram& from) {
    for (const auto& [count, weight] : from) into[count] += weight;
}

Histogram collect(std::uint64_t reps, std::size_t threads,
                  const std::function<long(Rng&)>& one_count, std::uint64_t master) {
    std::uint64_t n_chunks = (reps + kChunkReps - 1) / kChunkReps;
    std::vector<Histogram> parts(n_chunks);
    run_chunks(static_cast<std::size_t>(n_chunks), threads, [&](std::size_t c) {
        std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunkReps;
        std::uint64_t hi = std::min(reps, lo + kChunkReps);
        for (std::uint64_t rep = lo; rep < hi; ++rep) {
            Rng rng = Rng::for_replicate(master, rep);
            parts[c][one_count(rng)] += 1.0;
        }
    });
    Histogram out;
    for (const auto& part : parts) merge_into(out, part);
    return out;
}

// Aligned dense vectors over the union of observed counts.
std::pair<std::vector<double>, std::vector<double>> align(const Histogram& a,
                                                          const Histogram& b) {
    long max_count = 0;
    for (const auto& [c, w] : a) max_count = std::max(max_count, c);
    for (const auto& [c, w] : b) max_count = std::max(max_count, c);
    std::vector<double> va(static_cast<size_t>(max_count) + 1, 0.0);
    std::vector<double> vb(static_cast<size_t>(max_count) + 1, 0.0);
    for (const auto& [c, w] : a) va[static_cast<size_t>(c)] = w;
    for (const auto& [c, w] : b) vb[static_cast<size_t>(c)] = w;
    return {std::move(va), std::move(vb)};
}

}  // namespace

ConvergeReport converge_report(const std::vector<long>& ns, const Rat& theta, int k,
                               const Angle& alpha, const Rat& window_T,
                               std::uint64_t reps, std::uint64_t seed,
                               const TruncationParams& trunc, std::size_t threads) {
    if (ns.empty()) throw std::invalid_argument("converge_report: no sizes given");
    if (reps == 0) throw std::invalid_argument("converge_report: need replicates");
    if (window_T <= 0) throw std::invalid_argument("converge_report: window must be positive");
    std::size_t workers = threads == 0 ? thread_cap() : threads;

    LimitParams lp;
    lp.k = k;
    lp.theta = to_double(theta);
    if (alpha.is_rational()) {
        Int den = alpha.den();
        if (den >= (Int(1) << 62))
            throw std::invalid_argument("converge_report: angle denominator too large");
        lp.t = den.convert_to<std::uint64_t>();
    } else {
        lp.t = 0;
    }
    double t_d = to_double(window_T);
    lp.window_lo = -t_d;
    lp.window_hi = t_d;
    lp.trunc = trunc;
    LimitSimulator sim(lp);

    Histogram limit_hist = collect(
        reps, workers,
        [&sim](Rng& rng) {
            LimitWindowSample s = sim.replicate(rng);
            long count = 0;
            for (const auto& pt : s.points)
                count += static_cast<long>(pt.multiplicity);
            return count;
        },
        stage_master(seed, 0));

    ConvergeReport report;
    report.k = k;
    for (size_t si = 0; si < ns.size(); ++si) {
        long n = ns[si];
        if (n < k) throw std::invalid_argument("converge_report: n below k");
        EwensParams ep{n, theta};
        bool drop_zero = alpha.is_rational();
        // All finite stages replay the same streams: replicate r of a larger
        // n extends replicate r of a smaller one (the sequential sampler
        // consumes a prefix of the same draws), so the TV rows co-fluctuate
        // and the trend across n is not drowned by sampling noise.
        Histogram finite_hist = collect(
            reps, workers,
            [&](Rng& rng) {
                CycleType ct = sample_cycle_type(ep, rng);
                OrbitSpectrum os = orbit_spectrum(ct, k);
                WindowedPointSample wp = window_points(os, alpha, window_T);
                long count = 0;
                for (const auto& pt : wp.points) {
                    if (pt.flagged) continue;
                    if (drop_zero && pt.lo == 0 && pt.hi == 0) continue;
                    count += pt.multiplicity.convert_to<long>();
                }
                return count;
            },
            stage_master(seed, 1));

        auto [fv, lv] = align(finite_hist, limit_hist);
        ConvergeRow row;
        row.n = n;
        row.tv = tv_distance(fv, lv);
        row.chi2_p = chi_square_two_sample_p(fv, lv);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace permspec
