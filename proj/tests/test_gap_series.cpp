// Gap-probability series coefficients, series evaluation, the pair
// correlation closed form, and the integral-equation consistency check.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permspec/correlation.hpp"
#include "permspec/integral.hpp"
#include "permspec/numeric.hpp"
#include "permspec/series.hpp"

#include <cmath>
#include <vector>

using namespace permspec;

TEST_CASE("k = 1 coefficients are the exact inverse squared factorials") {
    GapSeries s = gap_series(1, 10);
    REQUIRE(s.coeffs.size() == 11);
    for (unsigned m = 0; m <= 10; ++m) {
        const GapCoeff& c = s.coeffs[m];
        CHECK(c.m == m);
        CHECK(c.exact);
        CHECK(c.err == 0);
        CHECK(c.exact_value == Rat(Int(1), factorial(m) * factorial(m)));
    }
}

TEST_CASE("k = 1 series evaluates to the Bessel gap probability") {
    GapSeries s = gap_series(1, 10);
    // P(0, x) = J_0(2 sqrt x); J_0(2) = 0.22389077914123567.
    SeriesValue v = gap_series_eval(s, 1.0);
    CHECK(std::abs(v.value.convert_to<double>() - 0.22389077914123567) < 1e-9);
    CHECK(v.err.convert_to<double>() == 0.0);

    // J_0(1) = 0.7651976865579666 at width 1/4.
    SeriesValue w = gap_series_eval(s, 0.25);
    CHECK(std::abs(w.value.convert_to<double>() - 0.7651976865579666) < 1e-12);

    SeriesValue zero = gap_series_eval(s, 0.0);
    CHECK(zero.value.convert_to<double>() == 1.0);
}

TEST_CASE("evaluation rejects widths outside the validity range") {
    GapSeries s = gap_series(1, 4);
    CHECK_THROWS_AS(gap_series_eval(s, -0.1), std::domain_error);
    CHECK_THROWS_AS(gap_series_eval(s, 1.0001), std::domain_error);
    GapSeries s2 = gap_series(2, 1);
    CHECK_NOTHROW(gap_series_eval(s2, 3.9));
    CHECK_THROWS_AS(gap_series_eval(s2, 4.0001), std::domain_error);
}

TEST_CASE("k = 2 leading coefficients carry certified values") {
    GapSeries s = gap_series(2, 2, 1e-7);
    REQUIRE(s.coeffs.size() == 3);
    CHECK(s.coeffs[0].exact);
    CHECK(s.coeffs[0].exact_value == Rat(1));

    double c1 = s.coeffs[1].value.convert_to<double>();
    double e1 = s.coeffs[1].err.convert_to<double>();
    CHECK(e1 < 1e-7);
    CHECK(std::abs(c1 - 0.182690742) < 1e-6 + e1);

    double c2 = s.coeffs[2].value.convert_to<double>();
    double e2 = s.coeffs[2].err.convert_to<double>();
    CHECK(e2 < 1e-7);
    CHECK(std::abs(c2 - 0.014476228) < 1e-6 + e2);
}

TEST_CASE("series parameters are validated") {
    CHECK_THROWS_AS(gap_series(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gap_series(1, 3, -1.0), std::invalid_argument);
}

TEST_CASE("pair correlation closed form") {
    CHECK(pair_correlation_phi(1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pair_correlation_phi(1.0, 2.0) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(pair_correlation_phi(1.0, -2.0) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(pair_correlation_phi(2.0, 1.5) == doctest::Approx(26.0 / 27.0).epsilon(1e-14));
    CHECK(pair_correlation_phi(1.0, 1.5) == doctest::Approx(0.5 + 1.0 / 2.25).epsilon(1e-14));
    // theta < 1 diverges at integer lags through the 0^negative convention.
    CHECK(std::isinf(pair_correlation_phi(0.5, 1.0)));
    CHECK_THROWS_AS(pair_correlation_phi(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pair_correlation_phi(1.0, 0.0), std::domain_error);
}

TEST_CASE("series satisfies the gap integral equation on (0,1)") {
    GapSeries s = gap_series(1, 12);
    std::vector<double> grid;
    for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
    CHECK(check_integral_equation(s, grid) < 1e-8);

    // A short truncation visibly violates the equation near 1.
    GapSeries coarse = gap_series(1, 3);
    CHECK(check_integral_equation(coarse, {0.9}) > 1e-6);

    CHECK_THROWS_AS(check_integral_equation(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(check_integral_equation(s, {1.5}), std::invalid_argument);
    GapSeries k2 = gap_series(2, 1);
    CHECK_THROWS_AS(check_integral_equation(k2, {0.5}), std::invalid_argument);
}
