// Exponential polynomials (sums of c x^a e^{-bx} with exact rational
// coefficients), closed under multiplication by such terms and under
// integration over (x, infinity).  They drive the exact evaluation of the
// ordered moment integrals of the largest Poisson-Dirichlet parts.

#pragma once

#include <vector>

#include "permspec/numeric.hpp"

namespace permspec {

struct ExpTerm {
    Rat c;
    unsigned a = 0;  // power of x
    unsigned b = 1;  // decay rate in e^{-bx}
};

class ExpPoly {
  public:
    ExpPoly() = default;  // zero polynomial

    static ExpPoly term(const Rat& c, unsigned a, unsigned b);

    // Integral over (x, infinity) as a function of x; every term must have
    // b >= 1 so the integral converges.
    ExpPoly tail_integral() const;

    // Product with c x^a e^{-bx}.
    ExpPoly times_term(const Rat& c, unsigned a, unsigned b) const;

    // Evaluation at x = 0: only the a == 0 terms survive.
    Rat value_at_zero() const;

    const std::vector<ExpTerm>& terms() const { return terms_; }

  private:
    std::vector<ExpTerm> terms_;  // sorted by (b, a), coefficients nonzero

    void normalize();
};

// The label-summed moment of the ordered stick lengths attached to a degree
// sequence: (1/d!) times the iterated integral of prod_i x_i^{d_i - 1}
// e^{-x_i} over x_1 >= x_2 >= ... >= x_v >= 0, where d = sum_i d_i and
// vertex label 1 owns the innermost (largest) variable.  Requires every
// d_i >= 1.
Rat pd1_label_summed_moment(const std::vector<int>& degrees);

}  // namespace permspec
