#include "permspec/exppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace permspec {

void ExpPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const ExpTerm& s, const ExpTerm& t) {
        return s.b != t.b ? s.b < t.b : s.a < t.a;
    });
    std::vector<ExpTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().a == t.a && merged.back().b == t.b)
            merged.back().c += t.c;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const ExpTerm& t) { return t.c == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

ExpPoly ExpPoly::term(const Rat& c, unsigned a, unsigned b) {
    ExpPoly p;
    p.terms_.push_back({c, a, b});
    p.normalize();
    return p;
}

ExpPoly ExpPoly::tail_integral() const {
    // int_x^inf t^a e^{-bt} dt = a! e^{-bx} sum_{j=0}^{a} x^j / (j! b^{a+1-j})
    ExpPoly out;
    for (const auto& t : terms_) {
        if (t.b == 0) throw std::domain_error("tail_integral: divergent term with b == 0");
        Rat a_fact(factorial(t.a));
        for (unsigned j = 0; j <= t.a; ++j) {
            Rat denom(factorial(j) * pow_int(Int(t.b), t.a + 1 - j));
            out.terms_.push_back({t.c * a_fact / denom, j, t.b});
        }
    }
    out.normalize();
    return out;
}

ExpPoly ExpPoly::times_term(const Rat& c, unsigned a, unsigned b) const {
    ExpPoly out;
    for (const auto& t : terms_) out.terms_.push_back({t.c * c, t.a + a, t.b + b});
    out.normalize();
    return out;
}

Rat ExpPoly::value_at_zero() const {
    Rat v = 0;
    for (const auto& t : terms_)
        if (t.a == 0) v += t.c;
    return v;
}

Rat pd1_label_summed_moment(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("pd1_label_summed_moment: empty degree sequence");
    unsigned total = 0;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("pd1_label_summed_moment: degree below 1");
        total += static_cast<unsigned>(d);
    }

    // Innermost variable belongs to label 1: start with its integrand,
    // integrate down to the next variable's lower limit, fold in that
    // variable's factor, and repeat; the final tail integral is evaluated
    // at the outer lower limit 0.
    ExpPoly acc = ExpPoly::term(1, static_cast<unsigned>(degrees[0] - 1), 1);
    for (size_t i = 1; i < degrees.size(); ++i)
        acc = acc.tail_integral().times_term(1, static_cast<unsigned>(degrees[i] - 1), 1);
    Rat integral = acc.tail_integral().value_at_zero();
    return integral / Rat(factorial(total));
}

}  // namespace permspec
