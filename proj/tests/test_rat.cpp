#include "catch_amalgamated.hpp"

#include "cubics/rat.hpp"

using namespace cubics;

TEST_CASE("Rat canonicalizes on construction", "[rat]") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(3, 2).num() == 3);
    CHECK(Rat(3, 2).den() == 2);
    CHECK(Rat(-1, 2).den() == 2);  // denominator stays positive
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("Rat arithmetic is exact", "[rat]") {
    const Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(-a == Rat(-1, 3));
    CHECK_THROWS_AS(a / Rat(0), std::domain_error);

    // no drift over many operations
    Rat s(0);
    for (long k = 1; k <= 50; ++k) s += Rat(1, k) - Rat(1, k + 1);
    CHECK(s == Rat(50, 51));
}

TEST_CASE("Rat predicates and comparisons", "[rat]") {
    CHECK(Rat(0).is_zero());
    CHECK(Rat(1).is_one());
    CHECK(Rat(7).is_integer());
    CHECK_FALSE(Rat(7, 2).is_integer());
    CHECK(Rat(-3, 4).sign() == -1);
    CHECK(Rat(0).sign() == 0);
    CHECK(Rat(-3, 4).abs() == Rat(3, 4));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1) < Rat(-1, 2));
    CHECK(Rat(2, 4) <= Rat(1, 2));
}

TEST_CASE("Rat inverse and pow", "[rat]") {
    CHECK(Rat(3, 4).inverse() == Rat(4, 3));
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(0) == Rat(1));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("Rat parse and str round trip", "[rat]") {
    CHECK(Rat::parse("22/7") == Rat(22, 7));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK(Rat(22, 7).str() == "22/7");
    CHECK(Rat(-5).str() == "-5");
    CHECK(Rat::parse(Rat(-130, 12).str()) == Rat(-65, 6));
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("integer gcd and lcm", "[rat]") {
    CHECK(gcd(Int(12), Int(18)) == 6);
    CHECK(gcd(Int(-12), Int(18)) == 6);
    CHECK(gcd(Int(0), Int(5)) == 5);
    CHECK(lcm(Int(4), Int(6)) == 12);
    CHECK(lcm(Int(1), Int(9)) == 9);
}

TEST_CASE("perfect square roots", "[rat]") {
    Int r;
    REQUIRE(perfect_sqrt(Int(49), r));
    CHECK(r == 7);
    REQUIRE(perfect_sqrt(Int(0), r));
    CHECK(r == 0);
    CHECK_FALSE(perfect_sqrt(Int(50), r));
    CHECK_FALSE(perfect_sqrt(Int(-4), r));

    Rat q;
    REQUIRE(perfect_sqrt(Rat(9, 4), q));
    CHECK(q == Rat(3, 2));
    REQUIRE(perfect_sqrt(Rat(256, 81), q));
    CHECK(q == Rat(16, 9));
    CHECK_FALSE(perfect_sqrt(Rat(2), q));
    CHECK_FALSE(perfect_sqrt(Rat(4, 7), q));
    CHECK_FALSE(perfect_sqrt(Rat(-9, 4), q));
}
