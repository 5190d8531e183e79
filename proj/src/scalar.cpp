#include "sleib/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace sleib {

GaussianRational::GaussianRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw ZeroDenominator("denominator is zero");
    re_.canonicalize();
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw ZeroScale("division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const {
    GaussianRational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    GaussianRational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

namespace {

// rat := INT ("/" POSINT)?, with an optional leading sign already consumed.
mpq_class parse_rat(std::string_view& s) {
    size_t n = 0;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    if (n == 0) throw ParseError("expected digits in scalar literal");
    mpz_class num(std::string(s.substr(0, n)));
    s.remove_prefix(n);
    mpz_class den(1);
    if (!s.empty() && s[0] == '/') {
        s.remove_prefix(1);
        size_t d = 0;
        while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
        if (d == 0) throw ParseError("expected digits after '/'");
        den = mpz_class(std::string(s.substr(0, d)));
        s.remove_prefix(d);
        if (den == 0) throw ZeroDenominator("literal with denominator 0");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

int parse_sign(std::string_view& s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        int sg = s[0] == '-' ? -1 : 1;
        s.remove_prefix(1);
        return sg;
    }
    return 0;  // no explicit sign
}

// SIGN? rat "i"?  -- returns the value and whether the trailing "i" was seen.
// A bare "i" (coefficient omitted) is accepted.
std::pair<mpq_class, bool> parse_term(std::string_view& s) {
    int sg = parse_sign(s);
    if (!s.empty() && s[0] == 'i') {
        s.remove_prefix(1);
        return {mpq_class(sg == -1 ? -1 : 1), true};
    }
    mpq_class v = parse_rat(s);
    if (sg == -1) v = -v;
    bool imag = false;
    if (!s.empty() && s[0] == 'i') {
        s.remove_prefix(1);
        imag = true;
    }
    return {v, imag};
}

void format_rat(std::ostream& os, const mpq_class& q) {
    os << q.get_num();
    if (q.get_den() != 1) os << '/' << q.get_den();
}

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) throw ParseError("empty scalar");
    auto [first, first_imag] = parse_term(s);
    if (s.empty()) {
        return first_imag ? GaussianRational(mpq_class(0), first)
                          : GaussianRational(first, mpq_class(0));
    }
    if (first_imag) throw ParseError("trailing input after imaginary part: '" + std::string(text) + "'");
    if (s[0] != '+' && s[0] != '-')
        throw ParseError("malformed scalar: '" + std::string(text) + "'");
    auto [second, second_imag] = parse_term(s);
    if (!second_imag || !s.empty())
        throw ParseError("malformed scalar: '" + std::string(text) + "'");
    return GaussianRational(first, second);
}

std::string format_scalar(const GaussianRational& x) {
    std::ostringstream os;
    const mpq_class& re = x.re();
    const mpq_class& im = x.im();
    if (im == 0) {
        format_rat(os, re);
        return os.str();
    }
    if (re != 0) {
        format_rat(os, re);
        if (im > 0) os << '+';
    }
    if (im == -1) {
        os << "-i";
    } else if (im == 1) {
        os << 'i';
    } else {
        format_rat(os, im);
        os << 'i';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
    return os << format_scalar(x);
}

}  // namespace sleib
