#include "catch_amalgamated.hpp"

#include "cubics/chow.hpp"

using namespace cubics;

TEST_CASE("symbol naming and normalization", "[chow]") {
    CHECK(sym_H().name() == "H");
    CHECK(sym_Ep(3).name() == "E_p3");
    CHECK(sym_Eq(1).name() == "E_q1");
    CHECK(sym_Em(10).name() == "E_m10");
    CHECK(sym_El(40).name() == "E_l40");
    CHECK(sym_Bp(7).name() == "B_p7");
    CHECK(sym_T(2).name() == "T2");
    CHECK(sym_Bh(1, 2, +1).name() == "B_h12p");
    CHECK(sym_Bh(2, 1, -1).name() == "B_h12m");  // indices sort
    CHECK(sym_Bh(2, 1, -1) == sym_Bh(1, 2, -1));
    CHECK(sym_Bhat().name() == "Bhat");
    CHECK(sym_That().name() == "That");
    CHECK(sym_H().is_upstairs());
    CHECK(sym_El(1).is_upstairs());
    CHECK_FALSE(sym_T(1).is_upstairs());
    CHECK_FALSE(sym_Bhat().is_upstairs());
}

TEST_CASE("divisor class arithmetic", "[chow]") {
    DivClass c(sym_H());
    c += DivClass(sym_Eq(1), Rat(-1));
    CHECK(c.coeff(sym_H()) == Rat(1));
    CHECK(c.coeff(sym_Eq(1)) == Rat(-1));
    CHECK(c.coeff(sym_Eq(2)) == Rat(0));
    CHECK(c.str() == "{E_q1: -1, H: 1}");

    // cancellation drops terms entirely
    DivClass d = c - c;
    CHECK(d.is_zero());
    CHECK(d.str() == "{}");

    CHECK((Rat(2) * c).coeff(sym_H()) == Rat(2));
    CHECK((Rat(0) * c).is_zero());
    CHECK((-c).coeff(sym_Eq(1)) == Rat(1));
    CHECK(c.all_upstairs());
    CHECK_FALSE((c + DivClass(sym_T(1))).all_upstairs());
    CHECK(DivClass(sym_H(), Rat(0)).is_zero());
}

TEST_CASE("hyperplanes and point membership", "[chow]") {
    const Hyperplane h = Hyperplane::coordinate(2);
    CHECK(h.contains(ProjPoint{1, 0, 3, 4, 5}));
    CHECK_FALSE(h.contains(ProjPoint{1, 1, 3, 4, 5}));
    CHECK(h.desc == "x2 = 0");

    const Hyperplane r = Hyperplane::root(1, 3, +1);  // x1 = x3
    CHECK(r.contains(ProjPoint{2, 5, 2, 1, 1}));
    CHECK_FALSE(r.contains(ProjPoint{2, 5, -2, 1, 1}));
    const Hyperplane rm = Hyperplane::root(1, 3, -1);  // x1 = -x3
    CHECK(rm.contains(ProjPoint{2, 5, -2, 1, 1}));

    CHECK_THROWS_AS(Hyperplane::coordinate(0), std::invalid_argument);
    CHECK_THROWS_AS(Hyperplane::root(2, 2, 1), std::invalid_argument);
}

TEST_CASE("p point indexing round trips", "[chow]") {
    const auto& pts = base_locus().p_points;
    REQUIRE(pts.size() == 16);
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(p_point_index(pts[i]) == static_cast<int>(i) + 1);
    CHECK_THROWS_AS(p_point_index(ProjPoint{1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST_CASE("strict transforms of hyperplanes", "[chow]") {
    // no p point has a zero coordinate, so x1 = 0 only meets the blown-up
    // locus in the four coordinate points e_2, ..., e_5
    const DivClass c1 = strict_transform_hyperplane(Hyperplane::coordinate(1));
    CHECK(c1.str() == "{E_q2: -1, E_q3: -1, E_q4: -1, E_q5: -1, H: 1}");

    // a root hyperplane contains three coordinate points and eight p points
    const DivClass r12 = strict_transform_hyperplane(Hyperplane::root(1, 2, +1));
    CHECK(r12.coeff(sym_H()) == Rat(1));
    CHECK(r12.coeff(sym_Eq(1)) == Rat(0));
    CHECK(r12.coeff(sym_Eq(2)) == Rat(0));
    CHECK(r12.coeff(sym_Eq(3)) == Rat(-1));
    CHECK(r12.coeff(sym_Eq(4)) == Rat(-1));
    CHECK(r12.coeff(sym_Eq(5)) == Rat(-1));
    int p_terms = 0;
    for (const auto& [s, c] : r12.terms())
        if (s.kind == SymKind::Ep) {
            CHECK(c == Rat(-1));
            ++p_terms;
        }
    CHECK(p_terms == 8);
}

TEST_CASE("pushforward along the classifying map", "[chow]") {
    const DivClass h = pushforward(DivClass(sym_H()));
    for (int j = 1; j <= 5; ++j) CHECK(h.coeff(sym_T(j)) == Rat(1));
    CHECK(pushforward(DivClass(sym_Eq(2))) == DivClass(sym_T(2)));
    CHECK(pushforward(DivClass(sym_Ep(3))) == DivClass(sym_Bp(3)));
    CHECK(pushforward(DivClass(sym_Em(1))).is_zero());
    CHECK(pushforward(DivClass(sym_El(17))).is_zero());
    CHECK_THROWS_AS(pushforward(DivClass(sym_T(1))), std::invalid_argument);

    // linearity
    const DivClass a = DivClass(sym_H(), Rat(2, 3)) + DivClass(sym_Eq(1), Rat(-5));
    CHECK(pushforward(a) ==
          Rat(2, 3) * pushforward(DivClass(sym_H())) - Rat(5) * pushforward(DivClass(sym_Eq(1))));

    // the strict transform of x_i = 0 pushes forward to the single class T_i
    const DivClass pushed = pushforward(strict_transform_hyperplane(Hyperplane::coordinate(2)));
    CHECK(pushed == DivClass(sym_T(2)));
}

TEST_CASE("the classifying map has degree 2", "[chow]") {
    CHECK(classifying_map_degree() == 2);
}

TEST_CASE("clearing the orbit-weighted counts", "[chow]") {
    CHECK(relation_from_counts(Rat(10), Rat(2)) == std::make_pair(Int(25), Int(4)));
    // perturbed counts do not give the 25:4 relation
    CHECK(relation_from_counts(Rat(9), Rat(2)) == std::make_pair(Int(45), Int(8)));
    CHECK(relation_from_counts(Rat(10), Rat(3)) == std::make_pair(Int(25), Int(6)));
    CHECK_THROWS_AS(relation_from_counts(Rat(0), Rat(2)), std::domain_error);
}

TEST_CASE("the boundary-tritangent relation from root hyperplanes", "[chow]") {
    for (const auto& [i, j, sign] : std::vector<std::tuple<int, int, int>>{
             {1, 2, +1}, {3, 5, -1}, {2, 4, +1}}) {
        const TbRelation r = verify_tb_relation(i, j, sign);
        CHECK(r.map_degree == 2);
        CHECK(r.boundary_count == Rat(10));  // degree 2 plus eight p points
        CHECK(r.tritangent_count == Rat(2));
        CHECK(r.cleared_boundary == 25);
        CHECK(r.cleared_tritangent == 4);
        CHECK(r.relation.str() == "{Bhat: 25, That: -4}");
        CHECK(r.holds);
        CHECK(r.pushed.coeff(sym_T(i)) == Rat(1));
        CHECK(r.pushed.coeff(sym_T(j)) == Rat(1));
    }
}

TEST_CASE("pushforwards of the 72 upstairs generators span rank 21", "[chow]") {
    CHECK(upstairs_generators().size() == 72);
    CHECK(picard_rank_check() == 21);
}
