#include "catch_amalgamated.hpp"

#include "cubics/matrix.hpp"

using namespace cubics;

namespace {

Matrix<Rat> from_longs(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<Rat> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("determinants agree between cofactor and Bareiss", "[matrix]") {
    const Matrix<Rat> m = from_longs({{2, 0, 1, 3},
                                      {1, -1, 4, 0},
                                      {5, 2, 2, 1},
                                      {0, 3, -2, 2}});
    const Rat d = det_bareiss(m);
    CHECK(det_cofactor(m) == d);
    CHECK(d != Rat(0));

    const Matrix<Rat> singular = from_longs({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}});
    CHECK(det_bareiss(singular) == Rat(0));
    CHECK(det_cofactor(singular) == Rat(0));
}

TEST_CASE("Vandermonde determinant formula", "[matrix]") {
    const long v[4] = {2, 3, 5, 7};
    Matrix<Rat> m(4, 4);
    for (int j = 0; j < 4; ++j) {
        Rat p(1);
        for (int i = 0; i < 4; ++i) {
            m(i, j) = p;
            p *= Rat(v[j]);
        }
    }
    Rat expect(1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) expect *= Rat(v[j] - v[i]);
    CHECK(det_bareiss(m) == expect);
}

TEST_CASE("rank", "[matrix]") {
    CHECK(rank(from_longs({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from_longs({{1, 0, 2}, {0, 1, 3}, {1, 1, 5}})) == 2);
    CHECK(rank(from_longs({{1, 0}, {0, 1}, {1, 1}})) == 2);
    CHECK(rank(Matrix<Rat>(3, 4)) == 0);
}

TEST_CASE("rref produces pivots and is idempotent", "[matrix]") {
    const Matrix<Rat> m = from_longs({{2, 4, 6}, {1, 2, 4}, {0, 0, 1}});
    const Rref r = rref(m);
    CHECK(r.rank() == 2);
    REQUIRE(r.pivots.size() == 2);
    CHECK(r.pivots[0] == 0);
    CHECK(r.pivots[1] == 2);
    for (std::size_t row = 0; row < r.pivots.size(); ++row)
        CHECK(r.mat(row, r.pivots[row]) == Rat(1));
    const Rref again = rref(r.mat);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(again.mat(i, j) == r.mat(i, j));
}

TEST_CASE("solve_in_span", "[matrix]") {
    const Vec u = {Rat(1), Rat(0), Rat(2)};
    const Vec v = {Rat(0), Rat(1), Rat(-1)};
    const Vec target = {Rat(3), Rat(-2), Rat(8)};  // 3u - 2v
    const auto sol = solve_in_span({u, v}, target);
    REQUIRE(sol);
    CHECK((*sol)[0] == Rat(3));
    CHECK((*sol)[1] == Rat(-2));

    const Vec outside = {Rat(0), Rat(0), Rat(1)};
    CHECK_FALSE(solve_in_span({u, v}, outside));

    // empty span contains exactly the zero vector
    CHECK(solve_in_span({}, Vec{}));
}

TEST_CASE("null_space vectors annihilate the rows", "[matrix]") {
    const Matrix<Rat> m = from_longs({{1, 2, 3, 4}, {0, 1, 1, 1}});
    const auto ns = null_space(m);
    CHECK(ns.size() == 2);  // rank-nullity
    for (const auto& v : ns)
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(dot(m.row(i), v) == Rat(0));

    const Matrix<Rat> full = from_longs({{1, 0}, {0, 1}});
    CHECK(null_space(full).empty());
}

TEST_CASE("primitive scaling", "[matrix]") {
    const Vec v = {Rat(1, 2), Rat(3, 4), Rat(-1)};
    const Vec p = primitive(v);
    CHECK(p == Vec{Rat(2), Rat(3), Rat(-4)});

    // leading sign is normalized to positive
    CHECK(primitive(Vec{Rat(-2), Rat(-4)}) == Vec{Rat(1), Rat(2)});
    CHECK(primitive(Vec{Rat(0), Rat(-3), Rat(6)}) == Vec{Rat(0), Rat(1), Rat(-2)});
    CHECK_THROWS_AS(primitive(Vec{Rat(0), Rat(0)}), std::domain_error);
}

TEST_CASE("dot and mat_vec", "[matrix]") {
    CHECK(dot(Vec{Rat(1), Rat(2)}, Vec{Rat(3), Rat(4)}) == Rat(11));
    CHECK_THROWS_AS(dot(Vec{Rat(1)}, Vec{Rat(1), Rat(2)}), std::invalid_argument);
    const Matrix<Rat> m = from_longs({{1, 2}, {3, 4}});
    CHECK(mat_vec(m, Vec{Rat(1), Rat(1)}) == Vec{Rat(3), Rat(7)});
}
