#include "permspec/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace permspec {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Largest integer strictly below a, then smallest strictly above b.
Int strict_floor(const Rat& a) {
    Int f = floor_div(boost::multiprecision::numerator(a), boost::multiprecision::denominator(a));
    return (Rat(f) == a) ? f - 1 : f;
}

Int strict_ceil(const Rat& b) {
    Int f = floor_div(boost::multiprecision::numerator(b), boost::multiprecision::denominator(b));
    return f + 1;
}

// Assign the remaining tuple coordinates to length classes `from`..end and
// accumulate ordered-tuple counts per orbit length (the lcm of used classes).
void compose(const std::vector<std::pair<long, long>>& classes, size_t from, int left,
             const Int& ways, const Int& lcm_so_far, std::map<Int, Int>& tuples) {
    if (left == 0) {
        tuples[lcm_so_far] += ways;
        return;
    }
    if (from == classes.size()) return;
    const auto [len, cnt] = classes[from];
    const long pool = len * cnt;
    Int falling = 1;
    for (int m = 0; m <= left; ++m) {
        if (m > 0) {
            if (pool - (m - 1) <= 0) break;
            falling *= pool - (m - 1);
        }
        Int w = ways * falling / factorial(static_cast<unsigned>(m));
        Int l = (m > 0) ? boost::multiprecision::lcm(lcm_so_far, Int(len)) : lcm_so_far;
        compose(classes, from + 1, left - m, w, l, tuples);
    }
}

}  // namespace

OrbitSpectrum orbit_spectrum(const CycleType& ct, int k) {
    if (k < 1 || k > ct.n) throw std::invalid_argument("orbit_spectrum requires 1 <= k <= n");
    std::vector<std::pair<long, long>> classes(ct.counts.begin(), ct.counts.end());
    std::map<Int, Int> tuples;  // orbit length -> ordered tuple count
    compose(classes, 0, k, factorial(static_cast<unsigned>(k)), 1, tuples);

    OrbitSpectrum out;
    out.n = ct.n;
    out.k = k;
    for (const auto& [j, cnt] : tuples) {
        assert(cnt % j == 0);
        out.entries[j] = cnt / j;
    }
    return out;
}

size_t WindowedPointSample::flag_count() const {
    size_t c = 0;
    for (const auto& p : points) c += p.flagged ? 1 : 0;
    return c;
}

WindowedPointSample window_points(const OrbitSpectrum& spec, const Angle& alpha, const Rat& T) {
    if (T <= 0) throw std::invalid_argument("window half-width must be positive");
    const Int scale = pow_int(spec.n, static_cast<unsigned>(spec.k));
    const Rat reach = T / Rat(scale);  // window radius in angle units
    const Rat a_lo = alpha.lower(), a_hi = alpha.upper();

    // Merge multiplicities by the exact fraction i/j; position and window
    // membership depend only on that fraction.
    std::map<Rat, Int> mult;
    for (const auto& [j, c] : spec.entries) {
        if (c == 0) continue;
        Int i_first = strict_floor(Rat(j) * (a_lo - reach)) + 1;
        Int i_last = strict_ceil(Rat(j) * (a_hi + reach)) - 1;
        for (Int i = i_first; i <= i_last; ++i) mult[Rat(i, j)] += c;
    }

    WindowedPointSample out;
    out.n = spec.n;
    out.k = spec.k;
    out.half_width = T;
    for (const auto& [frac, c] : mult) {
        Rat pos_lo = Rat(scale) * (frac - a_hi);
        Rat pos_hi = Rat(scale) * (frac - a_lo);
        const bool inside = pos_lo > -T && pos_hi < T;
        const bool outside = pos_hi <= -T || pos_lo >= T;
        if (outside) continue;
        out.points.push_back({pos_lo, pos_hi, c, !inside});
    }
    return out;
}

double star_discrepancy_1d(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("discrepancy of an empty sample");
    for (double v : values)
        if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("values must lie in [0,1)");
    std::sort(values.begin(), values.end());
    const double N = static_cast<double>(values.size());
    double hi = -2.0, lo = 2.0;
    for (size_t i = 0; i < values.size(); ++i) {
        double d = static_cast<double>(i + 1) / N - values[i];
        hi = std::max(hi, d);
        lo = std::min(lo, d);
    }
    return 1.0 / N + hi - lo;
}

}  // namespace permspec
