// Angles in [0,1): exact rationals, or certified fixed-point enclosures of
// irrational constants, plus the map psi_alpha(j) = min{ q - j*alpha > 0 }.

#pragma once

#include "permspec/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permspec {

// Raised when a certified interval cannot classify a quantity (e.g. the
// fractional part of j*alpha straddles an integer at the working precision).
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Angle {
  public:
    enum class Kind { Rational, Irrational };

    // s/t reduced into [0,1); t > 0 required.
    static Angle rational(const Int& s, const Int& t);
    // frac(sqrt(d)) for non-square d >= 2, enclosed to `bits` fraction bits.
    static Angle sqrt_of(unsigned d, unsigned bits);
    // frac((1+sqrt 5)/2) = (sqrt5 - 1)/2.
    static Angle golden(unsigned bits);
    // frac(e).
    static Angle euler_e(unsigned bits);
    // Decimal literal carrying |alpha - literal| <= 10^-sig_digits; the
    // fraction-bit budget becomes floor(sig_digits * log2(10)).
    static Angle decimal(const std::string& literal, unsigned sig_digits);
    // CLI syntax: "s/t", "0.37", "sqrt2", "frac(sqrt2)", "golden", "e",
    // "0.7071067811865475244008443621048490392848:40".
    static Angle parse(const std::string& text, unsigned bits);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_zero() const { return kind_ == Kind::Rational && num_ == 0; }

    // Rational form (valid when is_rational()).
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    // Irrational form: alpha lies in [lo, lo + width] * 2^-bits, inside (0,1).
    const Int& fixed_lo() const { return fixed_lo_; }
    unsigned fixed_width() const { return width_; }
    unsigned bits() const { return bits_; }

    // Enclosure endpoints as exact rationals (rational angles: both equal).
    Rat lower() const;
    Rat upper() const;

    std::string describe() const;

  private:
    Angle() = default;
    static Angle from_enclosure(Int lo, unsigned width, unsigned bits, std::string name);

    Kind kind_ = Kind::Rational;
    Int num_ = 0, den_ = 1;
    Int fixed_lo_ = 0;
    unsigned width_ = 0;
    unsigned bits_ = 0;
    std::string name_;
};

// psi_alpha(j): exact rational for rational alpha, else a certified interval
// [lo, hi] of width <= j*(width+...)*2^-bits.  Both bounds lie in (0,1].
struct PsiValue {
    bool exact;
    Rat lo, hi;  // lo == hi when exact
    Rat value() const { return lo; }
};

PsiValue psi_alpha(const Int& j, const Angle& alpha);

}  // namespace permspec
