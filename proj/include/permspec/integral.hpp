// Consistency check of the theta = 1 gap-probability series against the
// integral equation satisfied by the gap distribution on (0, 1).

#pragma once

#include <vector>

#include "permspec/series.hpp"

namespace permspec {

// Max over the grid of |x f(x) - int_0^x (1 - x + u) f(u) du| where f is the
// series evaluated as the k = 1 gap probability.  Grid points must lie in
// (0, 1); the series must have k == 1.
double check_integral_equation(const GapSeries& series, const std::vector<double>& grid);

}  // namespace permspec
