#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "densify/rational.hpp"

using densify::Rational;

TEST_CASE("rational normalizes to lowest terms") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).num() == 3);
    CHECK(Rational(6, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(9, 6).to_string() == "3/2");
    CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(3, 2) / Rational(8, 5) == Rational(15, 16));
    CHECK(-Rational(2, 5) == Rational(-2, 5));
    CHECK(Rational(8, 5) > Rational(3, 2));
    CHECK(Rational(-1, 3) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is reported") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("decimal rendering rounds half up") {
    CHECK(Rational(15, 16).to_decimal(2) == "0.94");
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(Rational(20, 21).to_decimal(2) == "0.95");
    CHECK(Rational(188, 189).to_decimal(2) == "0.99");
    CHECK(Rational(8, 5).to_decimal(6) == "1.600000");
    CHECK(Rational(7).to_decimal(0) == "7");
    CHECK(Rational(-1, 1000).to_decimal(2) == "0.00");
}

TEST_CASE("rational comparison agrees with cross multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x(a, b), y(c, d);
        CHECK((x < y) == (a * d < c * b));
        CHECK((x == y) == (a * d == c * b));
        CHECK(x + y - y == x);
        if (c != 0) CHECK(x / y * y == x);
    }
}
