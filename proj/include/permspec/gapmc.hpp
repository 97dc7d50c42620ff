// Monte Carlo estimation of gap probabilities of the limiting process: the
// chance that the window (y1, y2) holds no point, averaged over the
// truncated stick and prime-exponent laws.

#pragma once

#include <cstdint>

#include "permspec/limitproc.hpp"

namespace permspec {

struct GapEstimate {
    double estimate = 0.0;   // mean of the truncated product functional
    double std_error = 0.0;  // standard error of the mean
    double bias_bound = 0.0; // the truncated estimate exceeds the true
                             // probability by at most this much
    std::uint64_t reps = 0;
};

// theta > 0, y1 <= y2; width y2 - y1 == 0 gives probability exactly 1.
// Throws TruncationTooSmall when the bias bound exceeds trunc.bias_tol.
// threads == 0 uses the environment thread cap; results are byte-identical
// for every worker count.
GapEstimate gap_mc(int k, double theta, double y1, double y2,
                   const TruncationParams& trunc, std::uint64_t reps,
                   std::uint64_t seed, std::size_t threads = 0);

}  // namespace permspec
