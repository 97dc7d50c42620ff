#include "permspec/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace permspec {

Int pow_int(const Int& base, unsigned exp) {
    Int acc = 1, b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return acc;
}

Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

std::string decimal_string(const Rat& x, int frac_digits) {
    if (frac_digits < 0) throw std::invalid_argument("frac_digits must be >= 0");
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = pow_int(10, static_cast<unsigned>(frac_digits));
    // round(num*scale/den) half away from zero
    Int scaled = num * scale;
    Int q = scaled / den, r = scaled % den;
    if (2 * r >= den) ++q;
    Int ip = q / scale, fp = q % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(frac_digits) - frac.size(), '0');
    std::string out = (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.str();
    if (frac_digits > 0) out += "." + frac;
    return out;
}

std::string decimal_string(const BigFloat& x, int frac_digits) {
    // Exact: a cpp_bin_float value is a dyadic rational.
    Rat r(x);
    return decimal_string(r, frac_digits);
}

std::string decimal_string(double x, int frac_digits) {
    return decimal_string(Rat(x), frac_digits);
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace permspec
