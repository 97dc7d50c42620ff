#include "permspec/integral.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace permspec {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double fa, double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    return adaptive(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 40);
}

}  // namespace

double check_integral_equation(const GapSeries& series, const std::vector<double>& grid) {
    if (series.k != 1)
        throw std::invalid_argument("check_integral_equation: series must have k == 1");
    if (grid.empty())
        throw std::invalid_argument("check_integral_equation: empty grid");

    auto f = [&series](double u) {
        return static_cast<double>(gap_series_eval(series, u).value);
    };

    double worst = 0.0;
    for (double x : grid) {
        if (x <= 0.0 || x >= 1.0)
            throw std::invalid_argument("check_integral_equation: grid point outside (0, 1)");
        auto integrand = [&f, x](double u) { return (1.0 - x + u) * f(u); };
        double rhs = integrate(integrand, 0.0, x, 1e-13);
        double residual = std::abs(x * f(x) - rhs);
        worst = std::max(worst, residual);
    }
    return worst;
}

}  // namespace permspec
