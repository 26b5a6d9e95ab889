#ifndef SEPR_RATIONAL_HPP
#define SEPR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>

namespace sepr {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Arbitrary-precision rational in canonical form:
 * denominator > 0 and gcd(|num|, den) = 1 after every operation,
 * so equality is structural and values hash/print deterministically.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);

    // Strict parse of "p" or "p/q". Rejects q <= 0 and fractions not in
    // lowest terms; the message says which constraint failed.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on o == 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string str() const;  // "p" when integral, "p/q" otherwise

private:
    BigInt num_;
    BigInt den_;  // > 0
    void normalize();
};

}  // namespace sepr

#endif
