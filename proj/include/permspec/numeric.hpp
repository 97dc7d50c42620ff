// Shared arbitrary-precision number aliases and deterministic decimal formatting.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace permspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binary float with a 128-bit mantissa, used wherever certified error bounds
// are accumulated alongside values.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<128, boost::multiprecision::backends::digit_base_2>>;

Int pow_int(const Int& base, unsigned exp);
Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Fixed-point decimal rendering with `frac_digits` digits after the point,
// rounded half away from zero.  Stable across platforms.
std::string decimal_string(const Rat& x, int frac_digits);
std::string decimal_string(const BigFloat& x, int frac_digits);
std::string decimal_string(double x, int frac_digits);

double to_double(const Rat& x);

}  // namespace permspec
