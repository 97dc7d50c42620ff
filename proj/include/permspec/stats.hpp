// Statistical test helpers for the validation suites: chi-square
// goodness-of-fit and homogeneity p-values, Kolmogorov-Smirnov p-values,
// and total-variation distance between count histograms.

#pragma once

#include <functional>
#include <vector>

namespace permspec {

// P-value of Pearson's goodness-of-fit test of observed counts against
// expected counts with the same total.  Adjacent cells are merged until
// every expected count reaches min_expected; df = merged cells - 1.
double chi_square_gof_p(std::vector<double> observed, std::vector<double> expected,
                        double min_expected = 5.0);

// Homogeneity p-value for two count vectors over the same categories,
// merging adjacent categories until both rows' expected counts reach
// min_expected.
double chi_square_two_sample_p(std::vector<double> a, std::vector<double> b,
                               double min_expected = 5.0);

// Two-sided asymptotic Kolmogorov-Smirnov p-value of a sample against a
// continuous CDF.
double ks_p(std::vector<double> samples, const std::function<double(double)>& cdf);

// Total-variation distance between two count histograms (each normalized
// internally); the shorter vector is zero-padded.
double tv_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace permspec
