#include "sepr/qext.hpp"

#include <stdexcept>

namespace sepr {

QExt::QExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d < 0) throw std::invalid_argument("qext: negative radicand");
    if (d_ == 1) {  // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = Rational(0);
    }
    if (d_ == 0) b_ = Rational(0);  // sqrt(0) contributes nothing
    if (b_.is_zero()) d_ = 0;
}

long long QExt::joint_radicand(const QExt& x, const QExt& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw std::invalid_argument("qext: mismatched radicands " + std::to_string(x.d_) + " and " +
                                std::to_string(y.d_));
}

int QExt::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;          // sqrt(d) > 0 for d >= 2
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with d*b^2 (equality impossible for
    // square-free d >= 2, but fall through to 0 if it ever happens)
    Rational lhs = a_ * a_;
    Rational rhs = Rational(d_) * b_ * b_;
    auto c = lhs <=> rhs;
    if (c == std::strong_ordering::equal) return 0;
    return (c == std::strong_ordering::greater) ? sa : sb;
}

QExt QExt::operator-() const {
    QExt r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

QExt QExt::operator+(const QExt& o) const {
    return QExt(a_ + o.a_, b_ + o.b_, joint_radicand(*this, o));
}

QExt QExt::operator-(const QExt& o) const {
    return QExt(a_ - o.a_, b_ - o.b_, joint_radicand(*this, o));
}

QExt QExt::operator*(const QExt& o) const {
    long long d = joint_radicand(*this, o);
    return QExt(a_ * o.a_ + Rational(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
}

QExt QExt::operator/(const QExt& o) const {
    if (o.is_zero()) throw std::domain_error("qext: division by zero");
    long long d = joint_radicand(*this, o);
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - d*b^2)
    Rational norm = o.a_ * o.a_ - Rational(o.d_) * o.b_ * o.b_;
    QExt conj(o.a_, -o.b_, d);
    QExt prod = *this * conj;
    return QExt(prod.a_ / norm, prod.b_ / norm, d);
}

std::string QExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string radical = b_.str() + "*sqrt(" + std::to_string(d_) + ")";
    if (a_.is_zero()) return radical;
    if (b_.sign() > 0) return a_.str() + " + " + radical;
    return a_.str() + " - " + (-b_).str() + "*sqrt(" + std::to_string(d_) + ")";
}

bool is_square_free(long long d) {
    if (d < 0) return false;
    if (d <= 3) return true;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

CQExt CQExt::operator/(const CQExt& o) const {
    if (o.is_zero()) throw std::domain_error("cqext: division by zero");
    QExt norm = o.norm_sq();
    CQExt prod = *this * o.conj();
    return CQExt(prod.re_ / norm, prod.im_ / norm);
}

std::string CQExt::str() const {
    if (im_.is_zero()) return re_.str();
    std::string im = "(" + im_.str() + ")*i";
    if (re_.is_zero()) return im;
    return "(" + re_.str() + ") + " + im;
}

}  // namespace sepr
