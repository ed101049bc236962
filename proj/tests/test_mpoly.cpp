#include "catch_amalgamated.hpp"

#include "cubics/mpoly.hpp"

using namespace cubics;

namespace {
const MPoly X1 = MPoly::var(Var::x1);
const MPoly X2 = MPoly::var(Var::x2);
const MPoly X3 = MPoly::var(Var::x3);
}  // namespace

TEST_CASE("MPoly construction and ring axioms", "[mpoly]") {
    CHECK(MPoly().is_zero());
    CHECK(MPoly::constant(Rat(0)).is_zero());
    CHECK(MPoly::constant(Rat(5)).constant_value() == Rat(5));
    CHECK((X1 - X1).is_zero());
    CHECK((X1 + X2) * (X1 - X2) == X1 * X1 - X2 * X2);
    CHECK((X1 + X2).pow(2) == X1.pow(2) + Rat(2) * X1 * X2 + X2.pow(2));
    CHECK(X1 * (X2 + X3) == X1 * X2 + X1 * X3);
    CHECK(MPoly::var(Var::x1, 3) == X1 * X1 * X1);
    CHECK((X1 + X2).term_count() == 2);
    CHECK_FALSE(X1 == X2);
}

TEST_CASE("MPoly degrees", "[mpoly]") {
    const MPoly p = X1.pow(2) * X2 + X3;
    CHECK(p.degree() == 3);
    CHECK(p.degree_in(Var::x1) == 2);
    CHECK(p.degree_in(Var::x4) == 0);
    CHECK(MPoly().degree() == -1);

    // homogeneity in a variable block
    const std::vector<Var> xs = {Var::x1, Var::x2, Var::x3};
    const MPoly h = X1 * X2 * X3 + X1.pow(3);
    REQUIRE(h.homogeneous_degree(xs));
    CHECK(*h.homogeneous_degree(xs) == 3);
    CHECK_FALSE(p.homogeneous_degree(xs));
}

TEST_CASE("MPoly substitute and collect", "[mpoly]") {
    // x1 -> x2 + t into x1^2
    std::map<Var, MPoly> repl;
    repl[Var::x1] = X2 + MPoly::var(Var::t);
    const MPoly sub = X1.pow(2).substitute(repl);
    CHECK(sub == X2.pow(2) + Rat(2) * X2 * MPoly::var(Var::t) + MPoly::var(Var::t, 2));

    const auto by_t = sub.collect(Var::t);
    REQUIRE(by_t.size() == 3);
    CHECK(by_t.at(0) == X2.pow(2));
    CHECK(by_t.at(1) == Rat(2) * X2);
    CHECK(by_t.at(2) == MPoly::constant(Rat(1)));

    // substitution leaves unrelated variables alone
    CHECK(X3.substitute(repl) == X3);
}

TEST_CASE("MPoly coeff_of", "[mpoly]") {
    const MPoly p = Rat(3) * X1.pow(2) * X2 + X1 * X3 - Rat(7) * X2;
    CHECK(p.coeff_of({{Var::x1, 2}, {Var::x2, 1}}) == MPoly::constant(Rat(3)));
    CHECK(p.coeff_of({{Var::x1, 1}}) == X3);
    CHECK(p.coeff_of({{Var::x1, 0}, {Var::x2, 1}}) == MPoly::constant(Rat(-7)));
    CHECK(p.coeff_of({{Var::x1, 5}}).is_zero());
}

TEST_CASE("MPoly derivative", "[mpoly]") {
    const MPoly p = X1.pow(3) * X2 + Rat(4) * X1;
    CHECK(p.derivative(Var::x1) == Rat(3) * X1.pow(2) * X2 + MPoly::constant(Rat(4)));
    CHECK(p.derivative(Var::x2) == X1.pow(3));
    CHECK(p.derivative(Var::x3).is_zero());
    // product rule spot check
    const MPoly q = X1 * X2;
    CHECK((p * q).derivative(Var::x1) ==
          p.derivative(Var::x1) * q + p * q.derivative(Var::x1));
}

TEST_CASE("MPoly eval", "[mpoly]") {
    const MPoly p = X1.pow(2) - X2 * X3;
    std::map<Var, Rat> at = {{Var::x1, Rat(3)}, {Var::x2, Rat(2)}, {Var::x3, Rat(5)}};
    CHECK(p.eval(at) == Rat(-1));
    at.erase(Var::x3);
    CHECK_THROWS_AS(p.eval(at), std::domain_error);

    CHECK(eval_x(X1 * X2 - X3, {Rat(1), Rat(2), Rat(3), Rat(0), Rat(0)}) == Rat(-1));
    CHECK_THROWS_AS(eval_x(X1, {Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("MPoly str and parse round trip", "[mpoly]") {
    const MPoly p = Rat(2) * X1.pow(2) * X2 - Rat(1, 3) * X3 + MPoly::constant(Rat(5));
    CHECK(MPoly::parse(p.str()) == p);
    CHECK(MPoly::parse("x1^2 - 2*x2*x3 + 1/2") ==
          X1.pow(2) - Rat(2) * X2 * X3 + MPoly::constant(Rat(1, 2)));
    CHECK(MPoly().str() == "0");
    CHECK(MPoly::parse("X1 + lam*t") ==
          MPoly::var(Var::X1) + MPoly::var(Var::lam) * MPoly::var(Var::t));
    CHECK_THROWS_AS(MPoly::parse("z9"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse(""), std::invalid_argument);
}

TEST_CASE("variable helpers", "[mpoly]") {
    CHECK(x_var(1) == Var::x1);
    CHECK(x_var(5) == Var::x5);
    CHECK(cap_x_var(2) == Var::X2);
    CHECK(y_var(4) == Var::y4);
    CHECK_THROWS_AS(x_var(0), std::invalid_argument);
    CHECK_THROWS_AS(x_var(6), std::invalid_argument);
    CHECK_THROWS_AS(y_var(5), std::invalid_argument);
    CHECK(var_from_name("x3") == Var::x3);
    CHECK(var_from_name("lam") == Var::lam);
    CHECK_FALSE(var_from_name("bogus"));
}
