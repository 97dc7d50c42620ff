#include "permspec/angle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace permspec {

namespace {

Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

// cpp_int's string constructor treats a leading 0 as octal; force base 10.
Int parse_int10(std::string s) {
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed integer: " + s);
    size_t nz = s.find_first_not_of('0');
    s = (nz == std::string::npos) ? "0" : s.substr(nz);
    Int v(s);
    return neg ? -v : v;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Angle Angle::rational(const Int& s, const Int& t) {
    if (t <= 0) throw std::invalid_argument("angle denominator must be positive");
    Angle a;
    a.kind_ = Kind::Rational;
    Int g = boost::multiprecision::gcd(s < 0 ? Int(-s) : s, t);
    Int sr = s / g, tr = t / g;
    sr %= tr;
    if (sr < 0) sr += tr;
    a.num_ = sr;
    a.den_ = tr;
    a.name_ = sr.str() + "/" + tr.str();
    return a;
}

Angle Angle::from_enclosure(Int lo, unsigned width, unsigned bits, std::string name) {
    // Reduce mod 1 and validate the enclosure sits strictly inside (0,1).
    Int one = Int(1) << bits;
    Int f = lo % one;
    if (f < 0) f += one;
    if (f == 0 || f + width >= one)
        throw PrecisionExhausted("irrational enclosure touches an integer; raise --bits");
    Angle a;
    a.kind_ = Kind::Irrational;
    a.fixed_lo_ = f;
    a.width_ = width;
    a.bits_ = bits;
    a.name_ = std::move(name);
    return a;
}

Angle Angle::sqrt_of(unsigned d, unsigned bits) {
    if (bits < 128) throw std::invalid_argument("angle precision must be at least 128 bits");
    unsigned root = static_cast<unsigned>(std::lround(std::sqrt(static_cast<double>(d))));
    if (d < 2 || root * root == d) throw std::invalid_argument("sqrt angle requires non-square d >= 2");
    // floor(sqrt(d)*2^bits): sqrt(d) lies in [A, A+1) * 2^-bits.
    Int A = isqrt(Int(d) << (2 * bits));
    return from_enclosure(A, 1, bits, "frac(sqrt" + std::to_string(d) + ")");
}

Angle Angle::golden(unsigned bits) {
    if (bits < 128) throw std::invalid_argument("angle precision must be at least 128 bits");
    // (sqrt5 - 1)/2: from sqrt5*2^bits in [S, S+1), halving keeps width 1.
    Int S = isqrt(Int(5) << (2 * bits));
    Int lo = (S - (Int(1) << bits)) >> 1;
    return from_enclosure(lo, 1, bits, "frac(golden)");
}

Angle Angle::euler_e(unsigned bits) {
    if (bits < 128) throw std::invalid_argument("angle precision must be at least 128 bits");
    // Partial sums of e = sum 1/i!; stop when the tail 2/(N+1)! < 2^-(bits+2).
    Rat s = 0;
    Rat term = 1;
    Rat threshold(1, Int(1) << (bits + 2));
    unsigned i = 0;
    for (;;) {
        s += term;
        ++i;
        term /= i;
        // Tail after N terms is < 2/(N+1)!, i.e. < 2*term.
        if (2 * term < threshold) break;
        if (i > 4096) throw std::logic_error("e series failed to converge");
    }
    // e in [s, s + 2^-(bits+2)); floor to the grid, width 2 covers rounding.
    Int lo = floor_div(boost::multiprecision::numerator(s) << bits, boost::multiprecision::denominator(s));
    return from_enclosure(lo, 2, bits, "frac(e)");
}

Angle Angle::decimal(const std::string& literal, unsigned sig_digits) {
    double bits_d = static_cast<double>(sig_digits) * std::log2(10.0);
    unsigned bits = static_cast<unsigned>(std::floor(bits_d));
    if (bits < 128)
        throw std::invalid_argument("declared decimal precision too low: need at least 39 digits");
    // Parse the literal exactly as a rational.
    std::string digits = literal;
    size_t dot = digits.find('.');
    unsigned frac_len = 0;
    if (dot != std::string::npos) {
        frac_len = static_cast<unsigned>(digits.size() - dot - 1);
        digits.erase(dot, 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed decimal angle literal");
    Rat v(parse_int10(digits), pow_int(10, frac_len));
    Rat err(1, pow_int(10, sig_digits));
    Rat lo_r = v - err, hi_r = v + err;
    Int scale = Int(1) << bits;
    Int lo = floor_div(boost::multiprecision::numerator(lo_r) * scale, boost::multiprecision::denominator(lo_r));
    Int hi = floor_div(boost::multiprecision::numerator(hi_r) * scale, boost::multiprecision::denominator(hi_r)) + 1;
    Int w = hi - lo;
    if (w > 8) throw std::logic_error("decimal enclosure unexpectedly wide");
    return from_enclosure(lo, static_cast<unsigned>(w), bits, literal + ":" + std::to_string(sig_digits));
}

Angle Angle::parse(const std::string& text, unsigned bits) {
    if (text.empty()) throw std::invalid_argument("empty angle");
    std::string body = text;
    bool frac_wrapped = false;
    if (body.rfind("frac(", 0) == 0 && body.back() == ')') {
        body = body.substr(5, body.size() - 6);
        frac_wrapped = true;  // all angles are reduced mod 1 anyway
    }
    (void)frac_wrapped;
    if (body == "golden" || body == "phi") return golden(bits);
    if (body == "e") return euler_e(bits);
    if (body.rfind("sqrt", 0) == 0) {
        std::string arg = body.substr(4);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed sqrt angle: " + text);
        return sqrt_of(static_cast<unsigned>(std::stoul(arg)), bits);
    }
    size_t colon = body.find(':');
    if (colon != std::string::npos) {
        std::string lit = body.substr(0, colon);
        std::string digs = body.substr(colon + 1);
        if (digs.empty() || digs.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed declared-precision angle: " + text);
        return decimal(lit, static_cast<unsigned>(std::stoul(digs)));
    }
    size_t slash = body.find('/');
    if (slash != std::string::npos) {
        std::string sn = body.substr(0, slash), sd = body.substr(slash + 1);
        if (sn.empty() || sd.empty()) throw std::invalid_argument("malformed rational angle: " + text);
        Int s = parse_int10(sn), t = parse_int10(sd);
        if (t == 0) throw std::invalid_argument("angle denominator is zero: " + text);
        if (t < 0) {
            s = -s;
            t = -t;
        }
        return rational(s, t);
    }
    // Plain decimal or integer: exact rational.
    size_t dot = body.find('.');
    if (dot == std::string::npos) {
        if (body.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument("unrecognized angle: " + text);
        return rational(parse_int10(body), 1);
    }
    std::string digits = body;
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    dot = digits.find('.');
    unsigned frac_len = static_cast<unsigned>(digits.size() - dot - 1);
    digits.erase(dot, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unrecognized angle: " + text);
    Int n = parse_int10(digits);
    if (neg) n = -n;
    return rational(n, pow_int(10, frac_len));
}

Rat Angle::lower() const {
    if (kind_ == Kind::Rational) return Rat(num_, den_);
    return Rat(fixed_lo_, Int(1) << bits_);
}

Rat Angle::upper() const {
    if (kind_ == Kind::Rational) return Rat(num_, den_);
    return Rat(fixed_lo_ + width_, Int(1) << bits_);
}

std::string Angle::describe() const { return name_; }

PsiValue psi_alpha(const Int& j, const Angle& alpha) {
    if (j < 1) throw std::invalid_argument("psi_alpha requires j >= 1");
    PsiValue out;
    if (alpha.is_rational()) {
        Int v = (j * alpha.num()) % alpha.den();
        Rat psi = (v == 0) ? Rat(1) : Rat(alpha.den() - v, alpha.den());
        out.exact = true;
        out.lo = out.hi = psi;
        return out;
    }
    Int one = Int(1) << alpha.bits();
    Int nlo = j * alpha.fixed_lo();
    Int nhi = nlo + j * alpha.fixed_width();
    Int floor_lo = nlo >> alpha.bits();
    Int floor_hi = nhi >> alpha.bits();
    if (floor_lo != floor_hi)
        throw PrecisionExhausted("frac(j*alpha) interval straddles an integer; raise --bits");
    Int flo = nlo - (floor_lo << alpha.bits());
    Int fhi = nhi - (floor_lo << alpha.bits());
    if (flo == 0)
        throw PrecisionExhausted("cannot certify frac(j*alpha) > 0; raise --bits");
    out.exact = false;
    out.lo = Rat(one - fhi, one);
    out.hi = Rat(one - flo, one);
    return out;
}

}  // namespace permspec
