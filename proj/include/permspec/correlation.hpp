// Two-point intensity of the k = 1 limiting process under the theta-biased
// stick-breaking law, as an exact finite sum.

#pragma once

namespace permspec {

// phi_theta(x) = theta/(theta+1) + (theta/x^2) sum_{1 <= a <= |x|} a (1 - a/|x|)^{theta-1}.
// At integer |x| the last summand follows the pow conventions: 0 for
// theta > 1, 1 for theta = 1, +infinity for theta < 1.  Throws
// std::domain_error at x = 0.
double pair_correlation_phi(double theta, double x);

}  // namespace permspec
