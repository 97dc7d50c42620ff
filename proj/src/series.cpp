#include "permspec/series.hpp"

#include <stdexcept>

#include "permspec/exppoly.hpp"
#include "permspec/hypergraph.hpp"
#include "permspec/psi.hpp"

namespace permspec {

GapSeries gap_series(int k, unsigned order, double tolerance) {
    if (k < 1) throw std::invalid_argument("gap_series: k must be positive");
    if (tolerance <= 0) throw std::invalid_argument("gap_series: tolerance must be positive");

    GapSeries out;
    out.k = k;
    out.coeffs.push_back({0, true, Rat(1), BigFloat(1), BigFloat(0)});

    for (unsigned m = 1; m <= order; ++m) {
        std::vector<Hypergraph> graphs = enumerate_hypergraphs(k, static_cast<int>(m));

        std::vector<Rat> moments;
        moments.reserve(graphs.size());
        Rat moment_total = 0;
        for (const auto& g : graphs) {
            Rat mom = pd1_label_summed_moment(degree_sequence(g));
            moment_total += mom;
            moments.push_back(std::move(mom));
        }

        bool all_exact = true;
        Rat exact_sum = 0;
        BigFloat value = 0;
        BigFloat err = 0;
        double psi_tol =
            moment_total > 0 ? tolerance / to_double(moment_total) : tolerance;
        for (size_t i = 0; i < graphs.size(); ++i) {
            PsiResult psi = psi_g(graphs[i], psi_tol);
            if (psi.exact_one) {
                exact_sum += moments[i];
                value += BigFloat(moments[i]);
            } else {
                all_exact = false;
                value += psi.value * BigFloat(moments[i]);
                err += psi.err * BigFloat(moments[i]);
            }
        }

        GapCoeff c;
        c.m = m;
        c.exact = all_exact;
        if (all_exact) c.exact_value = exact_sum;
        c.value = value;
        c.err = err;
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

SeriesValue gap_series_eval(const GapSeries& series, double width) {
    if (width < 0) throw std::domain_error("gap_series_eval: negative width");
    double limit = 1.0;
    for (int i = 0; i < series.k; ++i) limit *= series.k;
    if (width > limit)
        throw std::domain_error("gap_series_eval: width exceeds the k^k validity range");

    BigFloat x(width);
    BigFloat value = 0, err = 0, power = 1;
    for (const auto& c : series.coeffs) {
        BigFloat signed_power = (c.m % 2 == 0) ? power : -power;
        value += c.value * signed_power;
        err += c.err * power;
        power *= x;
    }
    return {value, err};
}

}  // namespace permspec
