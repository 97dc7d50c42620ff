// The generating function S_G(q) attached to a hypergraph G: the sum of
// q^{phi(e)} over nonnegative integer vertex weights, where phi adds the
// total weight and, per edge, the weight carried by non-maximal vertices.
// Computed symbolically as A(q) / prod_i (1 - q^{a_i}) via the
// proper-subset recursion, with exact rational evaluation.

#pragma once

#include <map>
#include <vector>

#include "permspec/hypergraph.hpp"
#include "permspec/numeric.hpp"

namespace permspec {

struct SgRational {
    std::vector<Int> num;            // polynomial coefficients, num[i] multiplies q^i
    std::map<unsigned, unsigned> den;  // factor (1 - q^a) with multiplicity den[a]
};

// Symbolic S_G(q); factors over connected components.  Works for general
// finite hypergraphs, including repeated and mixed-size edges as produced
// by induced subhypergraphs.
SgRational s_g_symbolic(const Hypergraph& g);

// Exact evaluation at rational q in (0, 1).
Rat evaluate(const SgRational& f, const Rat& q);

// S_G(q) at a rational point; throws std::domain_error outside (0, 1).
Rat s_g_p(const Hypergraph& g, const Rat& q);

// Direct enumeration of the defining sum, truncating every vertex weight at
// max_weight: a lower bound that converges as max_weight grows.  Test oracle.
Rat s_g_p_direct(const Hypergraph& g, const Rat& q, unsigned max_weight);

}  // namespace permspec
