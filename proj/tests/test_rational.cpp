#include <doctest.h>
#include <sepr/rational.hpp>

#include <random>

using sepr::BigInt;
using sepr::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
    CHECK(Rational(BigInt(-4), BigInt(2)).str() == "-2");
    CHECK(Rational(BigInt(3), BigInt(2)).str() == "3/2");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("rational parse accepts canonical forms only") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("3/2") == Rational(BigInt(3), BigInt(2)));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("0/1") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("2/4"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0/5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(BigInt(1), BigInt(3)), b(BigInt(1), BigInt(6));
    CHECK(a + b == Rational(BigInt(1), BigInt(2)));
    CHECK(a - b == b);
    CHECK(a * b == Rational(BigInt(1), BigInt(18)));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(BigInt(-1), BigInt(3)));
    CHECK(a > b);
    CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-40, 40), den(1, 12);
    for (int i = 0; i < 2000; ++i) {
        Rational x(BigInt(num(rng)), BigInt(den(rng)));
        Rational y(BigInt(num(rng)), BigInt(den(rng)));
        Rational z(BigInt(num(rng)), BigInt(den(rng)));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(x.sign() * y.sign() == (x * y).sign());
    }
}
