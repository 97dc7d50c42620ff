#include "permspec/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace permspec {

double pair_correlation_phi(double theta, double x) {
    if (theta <= 0) throw std::invalid_argument("pair_correlation_phi: theta must be positive");
    if (x == 0) throw std::domain_error("pair_correlation_phi: undefined at x = 0");
    double ax = std::abs(x);
    double sum = 0.0;
    for (double a = 1.0; a <= ax; ++a)
        sum += a * std::pow(1.0 - a / ax, theta - 1.0);
    return theta / (theta + 1.0) + theta / (ax * ax) * sum;
}

}  // namespace permspec
