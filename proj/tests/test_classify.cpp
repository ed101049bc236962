#include "catch_amalgamated.hpp"

#include <set>

#include "cubics/classify.hpp"

using namespace cubics;

namespace {

const ProjPoint kFix{1, 2, 3, 4, 5};

// proportionality of two polynomial vectors with matching zero pattern
bool proportional(const std::vector<MPoly>& got, const std::vector<MPoly>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i].is_zero() != want[i].is_zero()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = i + 1; j < got.size(); ++j)
            if (got[i] * want[j] != got[j] * want[i]) return false;
    return true;
}

MPoly yv(int i) { return MPoly::var(y_var(i)); }

}  // namespace

TEST_CASE("the ten quintics and membership in V", "[classify]") {
    REQUIRE(v_basis().size() == 10);
    const std::vector<Var> xs = {Var::x1, Var::x2, Var::x3, Var::x4, Var::x5};
    for (const auto& q : v_basis()) {
        REQUIRE(q.homogeneous_degree(xs));
        CHECK(*q.homogeneous_degree(xs) == 5);
    }

    // v1 + v2 = x1 (x2^2 - x4^2)(x3^2 - x5^2), a Pluecker-style contraction
    CHECK(v_basis()[0] + v_basis()[1] == v_quintic(1, 2, 4, 3, 5));
    const auto coeffs = in_v(v_basis()[0] + v_basis()[1]);
    REQUIRE(coeffs);
    CHECK((*coeffs)[0] == Rat(1));
    CHECK((*coeffs)[1] == Rat(1));
    CHECK((*coeffs)[2] == Rat(0));

    CHECK_FALSE(in_v(MPoly::var(Var::x1, 5)));  // monomial outside the support
    CHECK(v_weyl_closed());
}

TEST_CASE("Phi at sample points", "[classify]") {
    CHECK(phi(kFix) ==
          ProjPoint{15, 49, 48, 160, 27, 315, 64, 224, 35, 125});
    CHECK(phi(ProjPoint{1, 1, 2, 3, 1}) == ProjPoint{1, 0, 1, 1, 0, 0, 0, 0, 0, -1});
    CHECK_THROWS_AS(phi(ProjPoint{1, 1, 1, 1, 1}), std::domain_error);  // base point
}

TEST_CASE("iota is the standard Cremona involution", "[classify]") {
    CHECK(iota(kFix) == ProjPoint{60, 30, 20, 15, 12});
    CHECK(iota(iota(ProjPoint{2, 7, -3, 5, 11})) == ProjPoint{2, 7, -3, 5, 11});
    CHECK_THROWS_AS(iota(ProjPoint{0, 1, 1, 1, 1}), std::domain_error);

    CHECK(phi_iota_invariance());
    CHECK(phi(iota(kFix)) == phi(kFix));
}

TEST_CASE("the Weyl action descends to P^9", "[classify]") {
    for (const char* name : {"s_14", "s_235"}) {
        const GroupElem g = generator(name).elem;
        const Matrix<Rat>& A = induced_matrix(g);
        const ProjPoint gx(apply_point(g, kFix.coords()));
        CHECK(phi(gx) == ProjPoint(mat_vec(A, phi(kFix).coords())));
    }

    GroupElem odd;
    odd.sign[0] = -1;
    CHECK_THROWS_AS(induced_matrix(odd), std::domain_error);
}

TEST_CASE("base locus inventory", "[classify]") {
    const BaseLocus& b = base_locus();
    CHECK(b.l_lines.size() == 40);
    CHECK(b.m_lines.size() == 10);
    CHECK(b.p_points.size() == 16);
    CHECK(b.q_points.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(b.q_points[j][j] == Rat(1));  // coordinate order
        CHECK(base_member(b.q_points[j]));
    }
    for (const auto& p : b.p_points) {
        CHECK(base_member(p));
        for (const auto& c : p.coords()) CHECK(c.abs() == Rat(1));
    }

    // sample points of the two seed lines
    CHECK(base_member(ProjPoint{1, 2, 2, 2, 2}));   // on <e1, (0,1,1,1,1)>
    CHECK(base_member(ProjPoint{3, 5, 0, 0, 0}));   // on <e1, e2>
    CHECK(on_base_line(ProjPoint{1, 2, 2, 2, 2}));
    CHECK(on_base_line(ProjPoint{3, 5, 0, 0, 0}));
    CHECK_FALSE(on_base_line(kFix));
    CHECK_FALSE(base_member(kFix));
}

TEST_CASE("the quintics vanish on the seed lines identically", "[classify]") {
    std::map<Var, MPoly> l_line = {{Var::x1, MPoly::var(Var::lam)}};
    std::map<Var, MPoly> m_line = {{Var::x1, MPoly::var(Var::lam)}};
    for (int i = 2; i <= 5; ++i) {
        l_line[x_var(i)] = MPoly::var(Var::t);
        m_line[x_var(i)] = (i == 2) ? MPoly::var(Var::t) : MPoly();
    }
    for (const auto& q : v_basis()) {
        CHECK(q.substitute(l_line).is_zero());
        CHECK(q.substitute(m_line).is_zero());
    }
}

TEST_CASE("the 21 singular points are the pairwise meets of the 50 lines", "[classify]") {
    const BaseLocus& b = base_locus();
    std::vector<Subspace> lines = b.l_lines;
    lines.insert(lines.end(), b.m_lines.begin(), b.m_lines.end());
    REQUIRE(lines.size() == 50);

    std::set<ProjPoint> meets;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            try {
                const Subspace w = lines[i].intersect(lines[j]);
                if (w.dim() == 1) meets.insert(ProjPoint(w.basis_row(0)));
            } catch (const std::domain_error&) {
                // disjoint pair
            }
        }
    const auto expected = base_singular_points();
    CHECK(expected.size() == 21);
    CHECK(std::vector<ProjPoint>(meets.begin(), meets.end()) == expected);
}

TEST_CASE("fibres of Phi are the involution orbits", "[classify]") {
    for (const auto& x : {kFix, ProjPoint{2, 7, -3, 5, 11}}) {
        std::vector<ProjPoint> expect = {x, iota(x)};
        std::sort(expect.begin(), expect.end());
        CHECK(fiber(phi(x)) == expect);
    }
}

TEST_CASE("fibre error paths", "[classify]") {
    CHECK_THROWS_AS(fiber(ProjPoint{1, 2, 3}), std::invalid_argument);

    // first coordinate zero: non-generic
    CHECK_THROWS_WITH(fiber(phi(ProjPoint{0, 2, 3, 4, 1})),
                      Catch::Matchers::ContainsSubstring("non-generic"));

    // a double root of the fibre quadric
    CHECK_THROWS_WITH(fiber(ProjPoint{1, 0, 0, 0, 1, 0, 0, 0, 0, 0}),
                      Catch::Matchers::ContainsSubstring("double root"));

    // irrational fibre: not a rational image point
    CHECK_THROWS_WITH(fiber(ProjPoint{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
                      Catch::Matchers::ContainsSubstring("not in the image"));

    // a5 = 0 kills the fibre quadric
    CHECK_THROWS_WITH(fiber(ProjPoint{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                      Catch::Matchers::ContainsSubstring("a5 = 0"));
}

TEST_CASE("limits along curves into the l chart", "[classify]") {
    CHECK(limit_map_l(Rat(2), {Rat(1), Rat(2), Rat(3)}) ==
          ProjPoint{0, 0, -1, -2, -1, -3, -2, -3, -1, -1});
    // the limit does not depend on the second coordinate a
    CHECK(limit_map_l(Rat(7), {Rat(1), Rat(2), Rat(3)}) ==
          limit_map_l(Rat(-3), {Rat(1), Rat(2), Rat(3)}));

    // symbolically: (0:0:y-z:x-z:y-z:-z:x-z:-z:x-y:-x) for direction (x,y,z)
    const MPoly x = yv(2), y = yv(3), z = yv(4);
    const std::vector<MPoly> want = {MPoly(), MPoly(), y - z, x - z, y - z,
                                     -z,      x - z,   -z,    x - y, -x};
    CHECK(proportional(limit_map_l_symbolic(), want));
}

TEST_CASE("limits along curves into the m chart", "[classify]") {
    CHECK(limit_map_m(Rat(2), {Rat(1), Rat(2), Rat(3)}) ==
          ProjPoint{0, 0, 0, 0, 0, 1, 0, 2, 0, 3});
    const MPoly x = yv(2), y = yv(3), z = yv(4);
    const std::vector<MPoly> want = {MPoly(), MPoly(), MPoly(), MPoly(), MPoly(),
                                     x,       MPoly(), y,       MPoly(), z};
    CHECK(proportional(limit_map_m_symbolic(), want));
}

TEST_CASE("exceptional chart over a coordinate point", "[classify]") {
    // at y = (1, 2, 3, 4):
    CHECK(eq_map({Rat(1), Rat(2), Rat(3), Rat(4)}) ==
          ProjPoint{5, 7, 16, 30, 9, 45, 12, 32, 0, 0});
    const std::vector<MPoly> want = {
        yv(1) * (yv(2).pow(2) - yv(3).pow(2)), yv(1) * (yv(3).pow(2) - yv(4).pow(2)),
        yv(2) * (yv(1).pow(2) - yv(3).pow(2)), yv(2) * (yv(1).pow(2) - yv(4).pow(2)),
        yv(3) * (yv(1).pow(2) - yv(2).pow(2)), yv(3) * (yv(1).pow(2) - yv(4).pow(2)),
        yv(4) * (yv(1).pow(2) - yv(2).pow(2)), yv(4) * (yv(1).pow(2) - yv(3).pow(2)),
        MPoly(), MPoly()};
    CHECK(proportional(eq_map_symbolic(), want));

    // the diagonal direction degenerates onto a base line
    CHECK_THROWS_AS(eq_map({Rat(1), Rat(1), Rat(1), Rat(1)}), std::domain_error);
}

TEST_CASE("exceptional chart over a singular orbit point", "[classify]") {
    CHECK(ep_map({Rat(0), Rat(0), Rat(1), Rat(2)}) ==
          ProjPoint{1, 0, 1, 1, 0, 0, 0, 0, 0, -1});
    const std::vector<MPoly> want = {
        yv(4) * (yv(2) - yv(3)), yv(2) * (yv(3) - yv(4)),
        yv(4) * (yv(1) - yv(3)), yv(3) * (yv(1) - yv(4)),
        yv(4) * (yv(1) - yv(2)), yv(2) * (yv(1) - yv(4)),
        yv(3) * (yv(1) - yv(2)), yv(2) * (yv(1) - yv(3)),
        (yv(1) - yv(2)) * (yv(3) - yv(4)), (yv(1) - yv(4)) * (yv(2) - yv(3))};
    CHECK(proportional(ep_map_symbolic(), want));

    // directions along the base locus degenerate
    CHECK_THROWS_AS(ep_map({Rat(1), Rat(1), Rat(1), Rat(1)}), std::domain_error);
    CHECK_THROWS_AS(ep_map({Rat(0), Rat(0), Rat(0), Rat(0)}), std::domain_error);
    CHECK_THROWS_AS(ep_map({Rat(1), Rat(0), Rat(0), Rat(0)}), std::domain_error);
}

TEST_CASE("cusp planes", "[classify]") {
    const auto& planes = cusp_planes();
    CHECK(planes.size() == 40);

    const Subspace seed = Subspace::span({{Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)},
                                          {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)},
                                          {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}});
    CHECK(std::find(planes.begin(), planes.end(), seed) != planes.end());

    // Phi is constant on the seed plane
    const ProjPoint v = cusp_point(seed);
    CHECK(v == phi(ProjPoint{1, 1, 2, 3, 1}));
    CHECK(v == phi(ProjPoint{1, 1, 5, -2, 1}));
    CHECK(v == ProjPoint{1, 0, 1, 1, 0, 0, 0, 0, 0, -1});

    // two different planes have different images
    const ProjPoint w = cusp_point(planes[0] == seed ? planes[1] : planes[0]);
    CHECK_FALSE(v == w);

    CHECK_THROWS_AS(cusp_point(Subspace::span({{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}})),
                    std::invalid_argument);
}

TEST_CASE("rank of the cross-ratio differential", "[classify]") {
    CHECK(differential_rank(ProjPoint{0, 2, 3, 4, 1}) == 4);
    CHECK(differential_rank(kFix) == 4);
    CHECK_THROWS_AS(differential_rank(ProjPoint{1, 1, 1, 1, 1}), std::domain_error);
}
