#include "doctest.h"
#include "lsk/rational.hpp"

using namespace lsk;

TEST_CASE("to_string renders reduced form with denominator only when needed") {
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(to_string(rat(2, 4)) == "1/2");
    CHECK(to_string(rat(-10, 4)) == "-5/2");
    CHECK(to_string(rat(3, -9)) == "-1/3");
}

TEST_CASE("rational_from_string accepts exactly p and p/q") {
    CHECK(*rational_from_string("0") == 0);
    CHECK(*rational_from_string("-691/2730") == rat(-691, 2730));
    CHECK(*rational_from_string("4/6") == rat(2, 3));

    CHECK(!rational_from_string(""));
    CHECK(!rational_from_string("1/0"));
    CHECK(!rational_from_string("1/-2"));
    CHECK(!rational_from_string(" 1"));
    CHECK(!rational_from_string("1.5"));
    CHECK(!rational_from_string("01"));
    CHECK(!rational_from_string("2/"));
    CHECK(!rational_from_string("--2"));
}

TEST_CASE("is_canonical_rational_string matches to_string output only") {
    CHECK(is_canonical_rational_string("-5/2"));
    CHECK(is_canonical_rational_string("0"));
    CHECK(!is_canonical_rational_string("4/6"));
    CHECK(!is_canonical_rational_string("2/1"));
    CHECK(!is_canonical_rational_string("-0"));
    CHECK(!is_canonical_rational_string("0/3"));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(21, 10) == 352716);
    CHECK(binomial(4, 7) == 0);
}
