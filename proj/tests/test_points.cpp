#include "catch_amalgamated.hpp"

#include "cubics/projpoint.hpp"
#include "cubics/subspace.hpp"

using namespace cubics;

TEST_CASE("ProjPoint canonical coordinates", "[points]") {
    CHECK(ProjPoint{2, 4, 6} == ProjPoint{1, 2, 3});
    CHECK(ProjPoint{-1, -2, 3} == ProjPoint{1, 2, -3});  // leading sign positive
    CHECK(ProjPoint{0, -5, 10} == ProjPoint{0, 1, -2});
    CHECK(ProjPoint(Vec{Rat(1, 2), Rat(1, 3)}) == ProjPoint{3, 2});
    CHECK(ProjPoint{1, 2, 3} != ProjPoint{1, 2, 4});
    CHECK_THROWS_AS(ProjPoint(Vec{Rat(0), Rat(0)}), std::domain_error);

    const ProjPoint p{3, 6, 9};
    CHECK(p.dim() == 3);
    CHECK(p[0] == Rat(1));
    CHECK(p.coords() == Vec{Rat(1), Rat(2), Rat(3)});
}

TEST_CASE("ProjPoint ordering, parse, str", "[points]") {
    CHECK(ProjPoint{1, 2, 3} < ProjPoint{1, 2, 4});
    CHECK_FALSE(ProjPoint{1, 2, 3} < ProjPoint{1, 2, 3});
    CHECK(ProjPoint{1, 2} < ProjPoint{1, 2, 3});  // shorter first

    CHECK(ProjPoint{1, -2, 3}.str() == "(1 : -2 : 3)");
    CHECK(ProjPoint::parse("(2 : 4 : -6)") == ProjPoint{1, 2, -3});
    CHECK(ProjPoint::parse("1:1/2:0") == ProjPoint{2, 1, 0});
    CHECK_THROWS_AS(ProjPoint::parse("()"), std::invalid_argument);
    CHECK_THROWS_AS(ProjPoint::parse("(1 : : 2)"), std::invalid_argument);
}

TEST_CASE("Subspace span is basis independent", "[points]") {
    const Vec a = {Rat(1), Rat(1), Rat(0)};
    const Vec b = {Rat(0), Rat(1), Rat(1)};
    const Vec c = {Rat(1), Rat(0), Rat(-1)};  // a - b
    const Subspace s1 = Subspace::span({a, b});
    const Subspace s2 = Subspace::span({c, b, a});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.ambient() == 3);
    CHECK_THROWS_AS(Subspace::span({}), std::invalid_argument);
}

TEST_CASE("Subspace contains", "[points]") {
    const Subspace s = Subspace::span({{Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(-1)}});
    CHECK(s.contains(Vec{Rat(2), Rat(3), Rat(1)}));  // 2*r1 + 3*r2
    CHECK_FALSE(s.contains(Vec{Rat(0), Rat(0), Rat(1)}));
    CHECK(s.contains(Vec{Rat(0), Rat(0), Rat(0)}));
    CHECK_THROWS_AS(s.contains(Vec{Rat(1)}), std::invalid_argument);

    const Subspace line = Subspace::span({{Rat(1), Rat(0), Rat(2)}});
    CHECK(s.contains(line));
    CHECK_FALSE(line.contains(s));
}

TEST_CASE("Subspace sum and intersection", "[points]") {
    const Subspace u = Subspace::span({{Rat(1), Rat(0), Rat(0), Rat(0)},
                                       {Rat(0), Rat(1), Rat(0), Rat(0)}});
    const Subspace w = Subspace::span({{Rat(0), Rat(1), Rat(0), Rat(0)},
                                       {Rat(0), Rat(0), Rat(1), Rat(0)}});
    CHECK(u.sum(w).dim() == 3);
    const Subspace meet = u.intersect(w);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(Vec{Rat(0), Rat(1), Rat(0), Rat(0)}));

    // trivial intersection throws
    const Subspace v1 = Subspace::span({{Rat(1), Rat(0), Rat(0), Rat(0)}});
    const Subspace v2 = Subspace::span({{Rat(0), Rat(0), Rat(0), Rat(1)}});
    CHECK_THROWS_AS(v1.intersect(v2), std::domain_error);

    // dim(U) + dim(W) = dim(U+W) + dim(U cap W) on a generic pair
    const Subspace g1 = Subspace::span({{Rat(1), Rat(2), Rat(3), Rat(4)},
                                        {Rat(0), Rat(1), Rat(1), Rat(0)},
                                        {Rat(0), Rat(0), Rat(1), Rat(7)}});
    const Subspace g2 = Subspace::span({{Rat(1), Rat(0), Rat(0), Rat(1)},
                                        {Rat(0), Rat(1), Rat(0), Rat(-1)}});
    CHECK(g1.dim() + g2.dim() == g1.sum(g2).dim() + g1.intersect(g2).dim());
}

TEST_CASE("Subspace ordering is a strict weak order on distinct spaces", "[points]") {
    const Subspace a = Subspace::span({{Rat(1), Rat(0)}});
    const Subspace b = Subspace::span({{Rat(0), Rat(1)}});
    CHECK((a < b || b < a));
    CHECK_FALSE(a < a);
}
