// The arithmetic factor psi(G) = prod_p (1 - 1/p)^{|V|} S_G(1/p) over all
// primes, evaluated with a certified absolute error bound: finitely many
// factors exactly, the rest through a rigorous tail estimate.  Results are
// cached per isomorphism class.

#pragma once

#include "permspec/hypergraph.hpp"
#include "permspec/numeric.hpp"

namespace permspec {

struct PsiResult {
    BigFloat value;
    BigFloat err;     // certified absolute error bound
    bool exact_one;   // psi == 1 exactly (no edge joins two vertices)
};

PsiResult psi_g(const Hypergraph& g, double tolerance);

}  // namespace permspec
