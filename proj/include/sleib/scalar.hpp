#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "sleib/error.hpp"

namespace sleib {

/// Exact complex scalar with rational real and imaginary parts (a Gaussian
/// rational).  Backed by GMP rationals, so values never overflow and equality
/// is exact structural equality of reduced fractions.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(long num, long den);
    GaussianRational(mpq_class re, mpq_class im);

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Multiplicative inverse; throws ZeroScale on zero.
    GaussianRational inverse() const;

    /// Integer power (exponent may be negative for nonzero values).
    GaussianRational pow(long e) const;

  private:
    mpq_class re_, im_;
};

/// Parses the scalar grammar:
///   scalar  := complex | real
///   real    := SIGN? rat
///   complex := real SIGN rat "i" | SIGN? rat "i"
///   rat     := INT ("/" POSINT)?
/// The canonical imaginary unit is a bare "i"; both "i" and "1i" are accepted.
GaussianRational parse_scalar(std::string_view text);

/// Canonical text form: reduced fractions, unit denominators omitted, no
/// "+0i", unit imaginary coefficients written as bare "i"/"-i".
/// parse_scalar(format_scalar(x)) == x.
std::string format_scalar(const GaussianRational& x);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace sleib
