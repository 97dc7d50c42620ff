// Convergence diagnostic: compares the window point-count distribution of
// finite-n spectra (cycle types drawn from the Ewens measure) against the
// limiting process, per requested n.

#pragma once

#include <cstdint>
#include <vector>

#include "permspec/angle.hpp"
#include "permspec/limitproc.hpp"
#include "permspec/numeric.hpp"

namespace permspec {

struct ConvergeRow {
    long n = 0;
    double tv = 0.0;      // total-variation distance between count histograms
    double chi2_p = 0.0;  // two-sample homogeneity p-value
};

struct ConvergeReport {
    int k = 1;
    std::vector<ConvergeRow> rows;  // one per requested n, input order
};

// Counts are multiplicity-weighted masses in the open window (-T, T) at the
// n^k scaling; exact-zero positions are excluded on both sides for rational
// angles, matching the limit's excluded atom.  threads == 0 uses the
// environment cap; output is independent of the worker count.
ConvergeReport converge_report(const std::vector<long>& ns, const Rat& theta, int k,
                               const Angle& alpha, const Rat& window_T,
                               std::uint64_t reps, std::uint64_t seed,
                               const TruncationParams& trunc, std::size_t threads = 0);

}  // namespace permspec
