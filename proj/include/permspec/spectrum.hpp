// Exact eigenangle data of the k-tuple permutation action: orbit-length
// multiplicities from a cycle type, rescaled windowed points around an
// angle, and an empirical discrepancy diagnostic.

#pragma once

#include "permspec/angle.hpp"
#include "permspec/ewens.hpp"
#include "permspec/numeric.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace permspec {

// C_{j,k}: number of length-j orbits of the diagonal action on ordered
// k-tuples of distinct points.  Each orbit of length j contributes the
// eigenangles i/j, so sum_j j * C_{j,k} = n(n-1)...(n-k+1).
struct OrbitSpectrum {
    long n = 0;
    int k = 1;
    std::map<Int, Int> entries;  // orbit length j -> multiplicity C_{j,k}
};

// Exact multiplicities via composition enumeration over the distinct cycle
// lengths; requires 1 <= k <= ct.n.
OrbitSpectrum orbit_spectrum(const CycleType& ct, int k);

// One rescaled point n^k (i/j - alpha).  Certified inside the open window
// unless flagged; coinciding fractions i/j are merged across orbit lengths.
struct WindowedPoint {
    Rat lo, hi;        // enclosure of the position; lo == hi when exact
    Int multiplicity;
    bool flagged;      // window membership could not be certified
};

struct WindowedPointSample {
    long n = 0;
    int k = 1;
    Rat half_width;
    std::vector<WindowedPoint> points;  // ascending by position
    size_t flag_count() const;
};

// All points of the rescaled eigenangle process inside (-T, T): for each
// orbit length j and each integer i, the position n^k (i/j - alpha) carries
// multiplicity C_{j,k}.  Rational alpha is exact; irrational alpha yields
// certified intervals, with boundary straddles flagged rather than dropped.
// Requires T > 0.
WindowedPointSample window_points(const OrbitSpectrum& spec, const Angle& alpha, const Rat& T);

// Two-sided empirical discrepancy sup over intervals [a,b] of
// |#{x in [a,b]}/N - (b-a)| for values in [0,1), via the sorted-sweep
// formula 1/N + max_i(i/N - x_(i)) - min_i(i/N - x_(i)).
double star_discrepancy_1d(std::vector<double> values);

}  // namespace permspec
