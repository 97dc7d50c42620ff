// Monte Carlo gap probabilities against the exact series, plus determinism
// and truncation behavior.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permspec/gapmc.hpp"
#include "permspec/series.hpp"

#include <cmath>

using namespace permspec;

TEST_CASE("k = 1 estimates match the Bessel gap probability") {
    TruncationParams trunc;
    // J_0(1) = 0.7651976865579666 for the width-1/4 window.
    GapEstimate e = gap_mc(1, 1.0, 0.0, 0.25, trunc, 200000, 404);
    CHECK(e.reps == 200000);
    CHECK(e.std_error > 0.0);
    CHECK(e.bias_bound == doctest::Approx(0.25 * 1e-3));
    CHECK(std::abs(e.estimate - 0.7651976865579666) < 4.0 * e.std_error + e.bias_bound);

    // J_0(2) = 0.22389077914123567 for the width-1 window.
    GapEstimate f = gap_mc(1, 1.0, 0.0, 1.0, trunc, 200000, 405);
    CHECK(std::abs(f.estimate - 0.22389077914123567) < 4.0 * f.std_error + f.bias_bound);

    // Translation invariance in distribution: (1, 2) behaves like (0, 1).
    GapEstimate g = gap_mc(1, 1.0, 1.0, 2.0, trunc, 200000, 406);
    CHECK(std::abs(g.estimate - 0.22389077914123567) < 4.0 * g.std_error + g.bias_bound);
}

TEST_CASE("k = 2 estimate is consistent with the series partial sum") {
    TruncationParams trunc;
    GapEstimate e = gap_mc(2, 1.0, 0.0, 1.0, trunc, 40000, 407);
    GapSeries s = gap_series(2, 2, 1e-6);
    double partial = 1.0 - s.coeffs[1].value.convert_to<double>() +
                     s.coeffs[2].value.convert_to<double>();
    // The partial sum omits orders m >= 3, whose alternating contribution
    // at width 1 stays near 1.2e-3; budget twice that on top of the Monte
    // Carlo interval.
    double tail_budget = 2.5e-3;
    CHECK(std::abs(e.estimate - partial) < 4.0 * e.std_error + e.bias_bound + tail_budget);
}

TEST_CASE("degenerate and monotone windows") {
    TruncationParams trunc;
    GapEstimate point = gap_mc(1, 1.0, 0.7, 0.7, trunc, 100, 1);
    CHECK(point.estimate == 1.0);
    CHECK(point.std_error == 0.0);
    CHECK(point.bias_bound == 0.0);

    GapEstimate narrow = gap_mc(1, 1.0, 0.0, 0.2, trunc, 30000, 2);
    GapEstimate wide = gap_mc(1, 1.0, 0.0, 0.8, trunc, 30000, 2);
    CHECK(narrow.estimate > wide.estimate);
}

TEST_CASE("theta shifts the gap probability") {
    TruncationParams trunc;
    // The stick masses always sum to one, and log(1 - w x) is concave, so
    // the heavier fragmentation of larger theta spreads the mass and raises
    // the product toward the Poisson limit exp(-w).
    GapEstimate t1 = gap_mc(1, 1.0, 0.0, 0.5, trunc, 30000, 3);
    GapEstimate t4 = gap_mc(1, 4.0, 0.0, 0.5, trunc, 30000, 3);
    CHECK(t4.estimate > t1.estimate);
    CHECK(t4.estimate < std::exp(-0.5) + 4.0 * t4.std_error + t4.bias_bound);
}

TEST_CASE("results are independent of the worker count") {
    TruncationParams trunc;
    GapEstimate a = gap_mc(2, 1.0, 0.0, 0.5, trunc, 8192, 11, 1);
    GapEstimate b = gap_mc(2, 1.0, 0.0, 0.5, trunc, 8192, 11, 4);
    GapEstimate c = gap_mc(2, 1.0, 0.0, 0.5, trunc, 8192, 11, 8);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    CHECK(a.std_error == b.std_error);
    CHECK(a.std_error == c.std_error);
}

TEST_CASE("truncation and parameter validation") {
    TruncationParams trunc;
    trunc.bias_tol = 1e-9;
    CHECK_THROWS_AS(gap_mc(1, 1.0, 0.0, 1.0, trunc, 100, 1), TruncationTooSmall);

    TruncationParams ok;
    CHECK_THROWS_AS(gap_mc(0, 1.0, 0.0, 1.0, ok, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(gap_mc(1, -1.0, 0.0, 1.0, ok, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(gap_mc(1, 1.0, 1.0, 0.0, ok, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(gap_mc(1, 1.0, 0.0, 1.0, ok, 0, 1), std::invalid_argument);
    TruncationParams small_cap;
    small_cap.r_cap = 1;
    CHECK_THROWS_AS(gap_mc(2, 1.0, 0.0, 1.0, small_cap, 100, 1), std::invalid_argument);
}
