#ifndef SEPR_QEXT_HPP
#define SEPR_QEXT_HPP

#include "sepr/rational.hpp"

namespace sepr {

/*
 * Element of the real quadratic field Q(sqrt(d)): value a + b*sqrt(d) with
 * rational a, b and a fixed square-free radicand d >= 0.
 *
 * Canonical form: d in {0,1} folds into the rational part, and a value with
 * b == 0 is stored with d = 0, so pure rationals compare equal regardless of
 * which field they were produced in. Two values combine when they share a
 * radicand or either one is rational; genuinely mixed radicands are an error.
 *
 * Signs are decided exactly: when a and b disagree in sign, compare a^2
 * against d*b^2 (sqrt(d) is irrational for square-free d >= 2, so the
 * comparison is strict). No floating point anywhere.
 */
class QExt {
public:
    QExt() : d_(0) {}
    QExt(Rational a) : a_(std::move(a)), d_(0) {}
    QExt(long long a) : a_(a), d_(0) {}
    QExt(Rational a, Rational b, long long d);

    static QExt sqrt_term(Rational coeff, long long d) { return QExt(Rational(0), std::move(coeff), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    long long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;

    QExt operator-() const;
    QExt operator+(const QExt& o) const;
    QExt operator-(const QExt& o) const;
    QExt operator*(const QExt& o) const;
    QExt operator/(const QExt& o) const;  // exact, via the conjugate a - b*sqrt(d)

    QExt& operator+=(const QExt& o) { return *this = *this + o; }
    QExt& operator-=(const QExt& o) { return *this = *this - o; }
    QExt& operator*=(const QExt& o) { return *this = *this * o; }
    QExt& operator/=(const QExt& o) { return *this = *this / o; }

    bool operator==(const QExt& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }

    std::string str() const;  // "a", "b*sqrt(d)", or "a + b*sqrt(d)"

private:
    Rational a_;
    Rational b_;
    long long d_;

    static long long joint_radicand(const QExt& x, const QExt& y);
};

// true when d has no repeated prime factor (0 and 1 count as square-free here)
bool is_square_free(long long d);

/*
 * Complex number over Q(sqrt(d)): re + im*i. Matrix entries live here.
 */
class CQExt {
public:
    CQExt() = default;
    CQExt(QExt re) : re_(std::move(re)) {}
    CQExt(long long re) : re_(re) {}
    CQExt(QExt re, QExt im) : re_(std::move(re)), im_(std::move(im)) {}

    const QExt& real() const { return re_; }
    const QExt& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    CQExt conj() const { return CQExt(re_, -im_); }
    QExt norm_sq() const { return re_ * re_ + im_ * im_; }  // z * conj(z), real and >= 0

    CQExt operator-() const { return CQExt(-re_, -im_); }
    CQExt operator+(const CQExt& o) const { return CQExt(re_ + o.re_, im_ + o.im_); }
    CQExt operator-(const CQExt& o) const { return CQExt(re_ - o.re_, im_ - o.im_); }
    CQExt operator*(const CQExt& o) const {
        return CQExt(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    CQExt operator/(const CQExt& o) const;

    CQExt& operator+=(const CQExt& o) { return *this = *this + o; }
    CQExt& operator-=(const CQExt& o) { return *this = *this - o; }
    CQExt& operator*=(const CQExt& o) { return *this = *this * o; }
    CQExt& operator/=(const CQExt& o) { return *this = *this / o; }

    bool operator==(const CQExt& o) const { return re_ == o.re_ && im_ == o.im_; }

    std::string str() const;

private:
    QExt re_;
    QExt im_;
};

}  // namespace sepr

#endif
