#include "sepr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sepr {

using boost::multiprecision::gcd;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // denominators are positive, so cross-multiplication preserves order
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

BigInt parse_int(std::string_view text, std::string_view what) {
    if (text.empty()) throw std::invalid_argument(std::string("rational: empty ") + std::string(what));
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-') {
        neg = true;
        i = 1;
        if (text.size() == 1) throw std::invalid_argument("rational: lone '-' sign");
    }
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("rational: unexpected character '" + std::string(1, text[i]) +
                                        "' in " + std::string(what));
        v = v * 10 + (text[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    BigInt num, den;
    if (slash == std::string_view::npos) {
        num = parse_int(text, "numerator");
        den = 1;
    } else {
        num = parse_int(text.substr(0, slash), "numerator");
        den = parse_int(text.substr(slash + 1), "denominator");
        if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
        if (den < 0)
            throw std::invalid_argument("rational: denominator must be positive in '" + std::string(text) + "'");
        BigInt g = gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1)
            throw std::invalid_argument("rational: '" + std::string(text) + "' is not in lowest terms");
    }
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

}  // namespace sepr
