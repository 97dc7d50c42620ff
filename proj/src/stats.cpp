#include "permspec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace permspec {

namespace {

// Merge adjacent cells until every merged expected count reaches the floor.
// A trailing underweight remainder is folded into the last merged cell.
void merge_low_cells(std::vector<double>& observed, std::vector<double>& expected,
                     double min_expected) {
    std::vector<double> mo, me;
    double co = 0.0, ce = 0.0;
    for (size_t i = 0; i < expected.size(); ++i) {
        co += observed[i];
        ce += expected[i];
        if (ce >= min_expected) {
            mo.push_back(co);
            me.push_back(ce);
            co = ce = 0.0;
        }
    }
    if (ce > 0.0 || co > 0.0) {
        if (me.empty()) {
            mo.push_back(co);
            me.push_back(ce);
        } else {
            mo.back() += co;
            me.back() += ce;
        }
    }
    observed = std::move(mo);
    expected = std::move(me);
}

double chi_square_upper_p(double stat, double df) {
    if (df < 0.5) return 1.0;
    boost::math::chi_squared dist(df);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

double chi_square_gof_p(std::vector<double> observed, std::vector<double> expected,
                        double min_expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof_p: mismatched or empty inputs");
    merge_low_cells(observed, expected, min_expected);
    double stat = 0.0;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0)
            throw std::invalid_argument("chi_square_gof_p: nonpositive expected count");
        double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    return chi_square_upper_p(stat, static_cast<double>(observed.size()) - 1.0);
}

double chi_square_two_sample_p(std::vector<double> a, std::vector<double> b,
                               double min_expected) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("chi_square_two_sample_p: mismatched or empty inputs");
    double na = 0.0, nb = 0.0;
    for (double x : a) na += x;
    for (double x : b) nb += x;
    if (na <= 0.0 || nb <= 0.0)
        throw std::invalid_argument("chi_square_two_sample_p: empty sample");
    double total = na + nb;

    // Merge adjacent categories until the smaller row's expected count
    // clears the floor in every merged category.
    std::vector<double> ma, mb;
    double ca = 0.0, cb = 0.0;
    double frac_min = std::min(na, nb) / total;
    for (size_t i = 0; i < a.size(); ++i) {
        ca += a[i];
        cb += b[i];
        if ((ca + cb) * frac_min >= min_expected) {
            ma.push_back(ca);
            mb.push_back(cb);
            ca = cb = 0.0;
        }
    }
    if (ca > 0.0 || cb > 0.0) {
        if (ma.empty()) {
            ma.push_back(ca);
            mb.push_back(cb);
        } else {
            ma.back() += ca;
            mb.back() += cb;
        }
    }
    if (ma.size() < 2) return 1.0;

    double stat = 0.0;
    for (size_t i = 0; i < ma.size(); ++i) {
        double col = ma[i] + mb[i];
        double ea = na * col / total;
        double eb = nb * col / total;
        stat += (ma[i] - ea) * (ma[i] - ea) / ea;
        stat += (mb[i] - eb) * (mb[i] - eb) / eb;
    }
    return chi_square_upper_p(stat, static_cast<double>(ma.size()) - 1.0);
}

double ks_p(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_p: empty sample");
    std::sort(samples.begin(), samples.end());
    size_t n = samples.size();
    double d = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    double sqrt_n = std::sqrt(static_cast<double>(n));
    double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    double p = 0.0;
    for (int j = 1; j <= 100; ++j) {
        double term = 2.0 * std::exp(-2.0 * j * j * lambda * lambda);
        p += (j % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

double tv_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double na = 0.0, nb = 0.0;
    for (double x : a) na += x;
    for (double x : b) nb += x;
    if (na <= 0.0 || nb <= 0.0)
        throw std::invalid_argument("tv_distance: empty histogram");
    double sum = 0.0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        double pa = i < a.size() ? a[i] / na : 0.0;
        double pb = i < b.size() ? b[i] / nb : 0.0;
        sum += std::abs(pa - pb);
    }
    return 0.5 * sum;
}

}  // namespace permspec
