#include <catch2/catch_amalgamated.hpp>

#include "overhang/rational.hpp"
#include "support/random_gen.hpp"

using overhang::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(5, 1).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and comparisons") {
    Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(half > third);
    CHECK(third < half);
    CHECK(half >= Rational(2, 4));
    CHECK(half.abs() == half);
    CHECK((-half).abs() == half);
    CHECK(Rational(0).is_zero());
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("exactness round trips") {
    testsupport::Rng rng(20240811);
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(1000, 999);
        Rational b = rng.rational(1000, 999);
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a * b) / b == a);
    }
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("3/-4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("3.25") == Rational(13, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("a").has_value());
    CHECK_FALSE(Rational::parse("1/").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("1.").has_value());
    CHECK_FALSE(Rational::parse("1.2.3").has_value());
    CHECK_FALSE(Rational::parse("1 2").has_value());
}

TEST_CASE("parse/str round trip") {
    testsupport::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(10000, 9999);
        auto back = Rational::parse(a.str());
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}

TEST_CASE("fixed-point formatting") {
    CHECK(Rational(1, 2).fixed(6) == "0.500000");
    CHECK(Rational(-1, 2).fixed(6) == "-0.500000");
    CHECK(Rational(1, 3).fixed(6) == "0.333333");
    CHECK(Rational(2, 3).fixed(6) == "0.666667");
    CHECK(Rational(0).fixed(6) == "0.000000");
    CHECK(Rational(25, 2).fixed(1) == "12.5");
    CHECK(Rational(1, 1000000000L).fixed(6) == "0.000000");
    CHECK(Rational(-1, 1000000000L).fixed(6) == "0.000000"); // no "-0"
    CHECK(Rational(7).fixed(0) == "7");
}
