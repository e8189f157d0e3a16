#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sea/rational.hpp"

using sea::Rational;

TEST_CASE("arithmetic stays reduced") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(1, 2) == Rational(1, 4));
    CHECK(Rational(3, 4) - Rational(1, 4) == Rational(1, 2));
    CHECK(Rational(1, 4) / Rational(1, 2) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(7, 21) == Rational(1, 3));
    CHECK(Rational(0) <= Rational(0));
    // a famous double-precision trap: 1/10 + 2/10 == 3/10 exactly
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("unit interval predicate") {
    CHECK(Rational(0).in_unit_interval());
    CHECK(Rational(1).in_unit_interval());
    CHECK(Rational(63, 64).in_unit_interval());
    CHECK_FALSE(Rational(-1, 64).in_unit_interval());
    CHECK_FALSE(Rational(65, 64).in_unit_interval());
}

TEST_CASE("division by zero and overflow throw") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    const Rational huge(INT64_MAX, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("parse round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-2/8") == Rational(-1, 4));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(-64, 64), den(1, 64);
    for (int i = 0; i < 500; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field laws on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-64, 64), den(1, 64);
    const auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
