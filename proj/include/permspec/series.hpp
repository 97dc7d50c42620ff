// Power-series expansion of the gap probability at theta = 1: coefficient
// c_m sums, over the covering k-uniform hypergraphs with m edges, the
// arithmetic factor psi(G) times the exact ordered moment of the degree
// sequence.  Order-k coefficients are exact rationals for k = 1 and carry
// certified error bounds otherwise.

#pragma once

#include <vector>

#include "permspec/numeric.hpp"

namespace permspec {

struct GapCoeff {
    unsigned m = 0;
    bool exact = false;  // value known as an exact rational
    Rat exact_value;     // meaningful when exact
    BigFloat value;      // numeric view, always filled
    BigFloat err;        // certified absolute error bound (0 when exact)
};

struct GapSeries {
    int k = 1;
    std::vector<GapCoeff> coeffs;  // index m runs 0..order
};

// Coefficients c_0..c_order; tolerance is the certified error budget per
// coefficient (ignored where coefficients are exact).
GapSeries gap_series(int k, unsigned order, double tolerance = 1e-9);

struct SeriesValue {
    BigFloat value;
    BigFloat err;  // propagated coefficient uncertainty; excludes the
                   // truncation tail beyond the computed order
};

// Alternating evaluation sum_m c_m (-width)^m; width must lie in
// [0, k^k], the range where the expansion is valid.
SeriesValue gap_series_eval(const GapSeries& series, double width);

}  // namespace permspec
