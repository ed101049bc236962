#pragma once

// The classifying map. V is the 10-dimensional space of quintics spanned
// by v_1..v_10 below; it is stable under W(D5) and under the standard
// Cremona involution iota(x) = (1/x1 : ... : 1/x5), and the rational map
//
//   Phi = (v_1 : ... : v_10) : P^4 --> P^9
//
// has degree 2 onto its image with Phi o iota = Phi. The module computes
// Phi, iota, fibres of Phi, the base locus (50 lines and 21 singular
// points), limits of Phi along curves hitting the base lines (boundary
// charts), the 40 cusp planes, and the rank of the differential of four
// cross-ratio coordinates.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "mpoly.hpp"
#include "projpoint.hpp"
#include "rootsys.hpp"
#include "subspace.hpp"
#include "surface.hpp"

namespace cubics {

// x_a (x_b^2 - x_c^2)(x_d^2 - x_e^2)
inline MPoly v_quintic(int a, int b, int c, int d, int e) {
    auto sq = [](int i) { return MPoly::var(x_var(i), 2); };
    return MPoly::var(x_var(a)) * (sq(b) - sq(c)) * (sq(d) - sq(e));
}

// The fixed basis of V, in the order the products are listed:
// x1(22-33)(44-55), x1(22-55)(33-44), x2(11-33)(44-55), x2(11-44)(33-55),
// x3(11-22)(44-55), x3(11-44)(22-55), x4(11-22)(33-55), x4(11-33)(22-55),
// x5(11-22)(33-44), x5(11-44)(22-33).
inline const std::vector<MPoly>& v_basis() {
    static const std::vector<MPoly> basis = {
        v_quintic(1, 2, 3, 4, 5), v_quintic(1, 2, 5, 3, 4), v_quintic(2, 1, 3, 4, 5),
        v_quintic(2, 1, 4, 3, 5), v_quintic(3, 1, 2, 4, 5), v_quintic(3, 1, 4, 2, 5),
        v_quintic(4, 1, 2, 3, 5), v_quintic(4, 1, 3, 2, 5), v_quintic(5, 1, 2, 3, 4),
        v_quintic(5, 1, 4, 2, 3)};
    return basis;
}

namespace detail {

// Monomial support of the basis, fixed once; membership in V is a linear
// solve against the coefficient vectors over that support.
struct VSolver {
    std::vector<ExpVec> monomials;
    std::map<ExpVec, std::size_t> index;
    std::vector<Vec> basis_vectors;

    static const VSolver& instance() {
        static const VSolver s = [] {
            VSolver v;
            for (const auto& q : v_basis())
                for (const auto& [e, c] : q.terms())
                    if (v.index.emplace(e, v.monomials.size()).second) v.monomials.push_back(e);
            for (const auto& q : v_basis()) {
                Vec col(v.monomials.size(), Rat(0));
                for (const auto& [e, c] : q.terms()) col[v.index.at(e)] = c;
                v.basis_vectors.push_back(col);
            }
            return v;
        }();
        return s;
    }
};

}  // namespace detail

// Coefficients of q in the fixed basis of V, if q lies in V.
inline std::optional<Vec> in_v(const MPoly& q) {
    const auto& solver = detail::VSolver::instance();
    Vec target(solver.monomials.size(), Rat(0));
    for (const auto& [e, c] : q.terms()) {
        auto it = solver.index.find(e);
        if (it == solver.index.end()) return std::nullopt;  // monomial outside the support
        target[it->second] = c;
    }
    return solve_in_span(solver.basis_vectors, target);
}

// V is stable under the Weyl group: v_i(g x) lies in V for every
// generator g and basis element v_i.
inline bool v_weyl_closed() {
    for (const auto& gen : weyl_generators())
        for (const auto& q : v_basis())
            if (!in_v(apply_poly(gen.elem, q))) return false;
    return true;
}

inline ProjPoint phi(const ProjPoint& x) {
    Vec img;
    for (const auto& q : v_basis()) img.push_back(eval_x(q, x.coords()));
    if (is_zero_vec(img)) throw std::domain_error("phi: base point of the classifying map");
    return ProjPoint(img);
}

inline ProjPoint iota(const ProjPoint& x) {
    Vec inv;
    for (int i = 0; i < 5; ++i) {
        if (x[i].is_zero()) throw std::domain_error("iota: zero coordinate");
        inv.push_back(x[i].inverse());
    }
    return ProjPoint(inv);
}

// Symbolically: v_k(x2x3x4x5, x1x3x4x5, ..., x1x2x3x4) = (x1...x5)^3 v_k(x)
// (equivalently v_k(1/x) = v_k(x)/(x1...x5)^2), hence Phi o iota = Phi
// wherever both are defined.
inline bool phi_iota_invariance() {
    std::map<Var, MPoly> repl;
    for (int i = 1; i <= 5; ++i) {
        MPoly prod = MPoly::constant(Rat(1));
        for (int j = 1; j <= 5; ++j)
            if (j != i) prod *= MPoly::var(x_var(j));
        repl[x_var(i)] = prod;
    }
    MPoly scale = MPoly::constant(Rat(1));
    for (int i = 1; i <= 5; ++i) scale *= MPoly::var(x_var(i));
    scale = scale.pow(3);
    for (const auto& q : v_basis())
        if (q.substitute(repl) != scale * q) return false;
    return true;
}

// The 10x10 matrix A(g) with Phi(g x) = A(g) Phi(x).
inline const Matrix<Rat>& induced_matrix(const GroupElem& g) {
    static std::map<std::uint32_t, Matrix<Rat>> cache;
    auto it = cache.find(g.code());
    if (it != cache.end()) return it->second;
    if (!WeylGroup::instance().contains(g)) throw std::domain_error("induced_matrix: not in W(D5)");
    Matrix<Rat> m(10, 10);
    for (int i = 0; i < 10; ++i) {
        const auto row = in_v(apply_poly(g, v_basis()[i]));
        if (!row) throw std::logic_error("induced_matrix: V is not stable under this element");
        for (int j = 0; j < 10; ++j) m(i, j) = (*row)[j];
    }
    return cache.emplace(g.code(), std::move(m)).first->second;
}

// ---------------------------------------------------------------------------
// Base locus

struct BaseLocus {
    std::vector<Subspace> l_lines;   // orbit of (s:t:t:t:t), 40 lines
    std::vector<Subspace> m_lines;   // orbit of (s:t:0:0:0), 10 lines
    std::vector<ProjPoint> p_points; // orbit of (1:1:1:1:1), 16 points
    std::vector<ProjPoint> q_points; // coordinate points, in coordinate order
};

namespace detail {

inline std::vector<Subspace> subspace_orbit(const Subspace& seed) {
    std::set<Subspace> orbit{seed};
    std::vector<Subspace> queue{seed};
    while (!queue.empty()) {
        const Subspace cur = queue.back();
        queue.pop_back();
        for (const auto& gen : weyl_generators()) {
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < cur.dim(); ++i)
                rows.push_back(apply_point(gen.elem, cur.basis_row(i)));
            const Subspace img = Subspace::span(rows);
            if (orbit.insert(img).second) queue.push_back(img);
        }
    }
    return std::vector<Subspace>(orbit.begin(), orbit.end());
}

inline std::vector<ProjPoint> point_orbit(const ProjPoint& seed) {
    std::set<ProjPoint> orbit{seed};
    std::vector<ProjPoint> queue{seed};
    while (!queue.empty()) {
        const ProjPoint cur = queue.back();
        queue.pop_back();
        for (const auto& gen : weyl_generators()) {
            const ProjPoint img(apply_point(gen.elem, cur.coords()));
            if (orbit.insert(img).second) queue.push_back(img);
        }
    }
    return std::vector<ProjPoint>(orbit.begin(), orbit.end());
}

}  // namespace detail

inline const BaseLocus& base_locus() {
    static const BaseLocus b = [] {
        BaseLocus out;
        const Vec e1 = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
        const Vec e2 = {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
        const Vec ones4 = {Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)};
        out.l_lines = detail::subspace_orbit(Subspace::span({e1, ones4}));
        out.m_lines = detail::subspace_orbit(Subspace::span({e1, e2}));
        out.p_points = detail::point_orbit(ProjPoint{1, 1, 1, 1, 1});
        for (int j = 0; j < 5; ++j) {
            std::vector<long> v(5, 0);
            v[j] = 1;
            out.q_points.push_back(ProjPoint::from_ints(v));
        }
        return out;
    }();
    return b;
}

// All ten quintics vanish at x.
inline bool base_member(const ProjPoint& x) {
    for (const auto& q : v_basis())
        if (!eval_x(q, x.coords()).is_zero()) return false;
    return true;
}

inline bool on_base_line(const ProjPoint& x) {
    const auto& b = base_locus();
    for (const auto* family : {&b.l_lines, &b.m_lines})
        for (const auto& line : *family)
            if (line.contains(x.coords())) return true;
    return false;
}

// The 21 singular points of the base locus.
inline std::vector<ProjPoint> base_singular_points() {
    const auto& b = base_locus();
    std::vector<ProjPoint> out = b.p_points;
    out.insert(out.end(), b.q_points.begin(), b.q_points.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Fibres of Phi

namespace detail {

// Value of an arbitrary q in V at the (unknown) fibre point, up to the
// single scale factor shared by all of V: the in-V coefficients of q
// contracted with the coordinates of p.
inline Rat v_value_at_fiber(const MPoly& q, const ProjPoint& p) {
    const auto coeffs = in_v(q);
    if (!coeffs) throw std::logic_error("v_value_at_fiber: polynomial not in V");
    Rat s(0);
    for (int i = 0; i < 10; ++i) s += (*coeffs)[i] * p[i];
    return s;
}

}  // namespace detail

// Rational points of Phi^{-1}(p) for generic p, computed in the chart
// x3 = 1. Writing a_i = p_i / p_1, the coordinate x1 satisfies
//     a5 x1^2 + (1 - a3^2 + a5^2) x1 + a5 = 0
// (the two roots are reciprocal), then x2 = a3 x1 / (a5 x1 + 1); x4 and
// x5 are recovered from the analogous ratios with the roles of x2 and
// x4 (resp. x5) exchanged, which lie in V and are therefore readable off
// p. Every candidate is kept only if Phi reproduces p exactly.
inline std::vector<ProjPoint> fiber(const ProjPoint& p) {
    if (p.dim() != 10) throw std::invalid_argument("fiber: need a point of P^9");
    if (p[0].is_zero())
        throw std::domain_error("fiber: non-generic point (first coordinate vanishes)");
    const Rat a3 = p[2] / p[0], a5 = p[4] / p[0];
    if (a5.is_zero()) throw std::domain_error("fiber: degenerate fibre (a5 = 0)");
    const Rat lin = Rat(1) - a3 * a3 + a5 * a5;
    const Rat disc = lin * lin - Rat(4) * a5 * a5;
    if (disc.is_zero()) throw std::domain_error("fiber: degenerate fibre (double root)");
    Rat sq;
    if (disc.sign() < 0 || !perfect_sqrt(disc, sq))
        throw std::domain_error("fiber: point not in the image (no rational roots)");

    const GroupElem s24 = generator("s_24").elem;
    const GroupElem s25 = generator("s_25").elem;
    auto ratio_pair = [&](const GroupElem& g) -> std::optional<std::pair<Rat, Rat>> {
        const Rat q1 = detail::v_value_at_fiber(apply_poly(g, v_basis()[0]), p);
        if (q1.is_zero()) return std::nullopt;
        const Rat q3 = detail::v_value_at_fiber(apply_poly(g, v_basis()[2]), p);
        const Rat q5 = detail::v_value_at_fiber(apply_poly(g, v_basis()[4]), p);
        return std::make_pair(q3 / q1, q5 / q1);
    };
    const auto r4 = ratio_pair(s24);
    const auto r5 = ratio_pair(s25);

    std::set<ProjPoint> points;
    for (int pick = 0; pick < 2; ++pick) {
        const Rat x1 = (-lin + (pick == 0 ? sq : -sq)) / (Rat(2) * a5);
        const Rat den2 = a5 * x1 + Rat(1);
        if (den2.is_zero() || !r4 || !r5) continue;
        const Rat den4 = r4->second * x1 + Rat(1);
        const Rat den5 = r5->second * x1 + Rat(1);
        if (den4.is_zero() || den5.is_zero()) continue;
        const Vec cand = {x1, a3 * x1 / den2, Rat(1), r4->first * x1 / den4,
                          r5->first * x1 / den5};
        try {
            const ProjPoint candidate(cand);
            if (phi(candidate) == p) points.insert(candidate);
        } catch (const std::domain_error&) {
            // candidate hit the base locus; discard
        }
    }
    if (points.empty()) throw std::domain_error("fiber: point not in the image");
    return std::vector<ProjPoint>(points.begin(), points.end());
}

// ---------------------------------------------------------------------------
// Limits of Phi along curves (boundary charts)

namespace detail {

// Leading coefficients in t of the basis quintics along a parametrised
// path; the limit of Phi along the path as t -> 0.
inline std::vector<MPoly> phi_limit_along(const std::vector<MPoly>& path) {
    if (path.size() != 5) throw std::invalid_argument("phi_limit_along: need 5 components");
    std::map<Var, MPoly> repl;
    for (int i = 1; i <= 5; ++i) repl[x_var(i)] = path[i - 1];
    std::vector<std::map<int, MPoly>> collected;
    int min_order = -1;
    for (const auto& q : v_basis()) {
        collected.push_back(q.substitute(repl).collect(Var::t));
        const auto& c = collected.back();
        if (!c.empty() && (min_order < 0 || c.begin()->first < min_order))
            min_order = c.begin()->first;
    }
    if (min_order < 0)
        throw std::domain_error("phi_limit_along: the path lies in the base locus");
    std::vector<MPoly> out;
    for (const auto& c : collected) {
        auto it = c.find(min_order);
        out.push_back(it == c.end() ? MPoly() : it->second);
    }
    return out;
}

inline ProjPoint limit_point(const std::vector<MPoly>& leading) {
    Vec v;
    for (const auto& f : leading) v.push_back(f.constant_value());
    return ProjPoint(v);
}

}  // namespace detail

// Limit of Phi along (1 : a : a + t*dx : a + t*dy : a + t*dz) as t -> 0;
// for generic a this is (0:0:y-z:x-z:y-z:-z:x-z:-z:x-y:-x) up to scale,
// independent of a.
inline ProjPoint limit_map_l(const Rat& a, const std::array<Rat, 3>& dir) {
    std::vector<MPoly> path = {MPoly::constant(Rat(1)), MPoly::constant(a)};
    for (int k = 0; k < 3; ++k)
        path.push_back(MPoly::constant(a) + MPoly::var(Var::t) * MPoly::constant(dir[k]));
    return detail::limit_point(detail::phi_limit_along(path));
}

// The same limit with a and the direction kept symbolic (a = y1,
// direction (y2, y3, y4)).
inline std::vector<MPoly> limit_map_l_symbolic() {
    std::vector<MPoly> path = {MPoly::constant(Rat(1)), MPoly::var(Var::y1)};
    for (int k = 2; k <= 4; ++k)
        path.push_back(MPoly::var(Var::y1) + MPoly::var(Var::t) * MPoly::var(y_var(k)));
    return detail::phi_limit_along(path);
}

// Limit of Phi along (1 : a : t*dx : t*dy : t*dz); for generic a this is
// (0:0:0:0:0:x:0:y:0:z).
inline ProjPoint limit_map_m(const Rat& a, const std::array<Rat, 3>& dir) {
    std::vector<MPoly> path = {MPoly::constant(Rat(1)), MPoly::constant(a)};
    for (int k = 0; k < 3; ++k) path.push_back(MPoly::var(Var::t) * MPoly::constant(dir[k]));
    return detail::limit_point(detail::phi_limit_along(path));
}

inline std::vector<MPoly> limit_map_m_symbolic() {
    std::vector<MPoly> path = {MPoly::constant(Rat(1)), MPoly::var(Var::y1)};
    for (int k = 2; k <= 4; ++k) path.push_back(MPoly::var(Var::t) * MPoly::var(y_var(k)));
    return detail::phi_limit_along(path);
}

// Limit of Phi along (t*y1 : t*y2 : t*y3 : t*y4 : 1): the chart of the
// exceptional divisor over the singular point q5.
inline ProjPoint eq_map(const std::array<Rat, 4>& y) {
    std::vector<MPoly> path;
    for (int k = 0; k < 4; ++k) path.push_back(MPoly::var(Var::t) * MPoly::constant(y[k]));
    path.push_back(MPoly::constant(Rat(1)));
    return detail::limit_point(detail::phi_limit_along(path));
}

inline std::vector<MPoly> eq_map_symbolic() {
    std::vector<MPoly> path;
    for (int k = 1; k <= 4; ++k) path.push_back(MPoly::var(Var::t) * MPoly::var(y_var(k)));
    path.push_back(MPoly::constant(Rat(1)));
    return detail::phi_limit_along(path);
}

// Limit of Phi along (1 + t*y1 : ... : 1 + t*y4 : 1): the chart of the
// exceptional divisor over the singular point p1 = (1:1:1:1:1).
inline ProjPoint ep_map(const std::array<Rat, 4>& y) {
    std::vector<MPoly> path;
    for (int k = 0; k < 4; ++k)
        path.push_back(MPoly::constant(Rat(1)) + MPoly::var(Var::t) * MPoly::constant(y[k]));
    path.push_back(MPoly::constant(Rat(1)));
    return detail::limit_point(detail::phi_limit_along(path));
}

inline std::vector<MPoly> ep_map_symbolic() {
    std::vector<MPoly> path;
    for (int k = 1; k <= 4; ++k)
        path.push_back(MPoly::constant(Rat(1)) + MPoly::var(Var::t) * MPoly::var(y_var(k)));
    path.push_back(MPoly::constant(Rat(1)));
    return detail::phi_limit_along(path);
}

// ---------------------------------------------------------------------------
// Cusp planes

// The Weyl orbit of the plane (s:s:t:u:s); Phi is constant on each plane
// away from the base locus.
inline const std::vector<Subspace>& cusp_planes() {
    static const std::vector<Subspace> planes = [] {
        const Vec r1 = {Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)};
        const Vec r2 = {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)};
        const Vec r3 = {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)};
        return detail::subspace_orbit(Subspace::span({r1, r2, r3}));
    }();
    return planes;
}

// The constant value of Phi on a cusp plane, from a generic sample point.
inline ProjPoint cusp_point(const Subspace& plane) {
    if (plane.dim() != 3) throw std::invalid_argument("cusp_point: need a plane in P^4");
    for (long c1 = 1; c1 < 8; ++c1)
        for (long c2 = c1 + 1; c2 < c1 + 8; ++c2) {
            Vec pt(5, Rat(0));
            for (int i = 0; i < 5; ++i)
                pt[i] = plane.basis_row(0)[i] + Rat(c1) * plane.basis_row(1)[i] +
                        Rat(c2) * plane.basis_row(2)[i];
            if (is_zero_vec(pt)) continue;
            const ProjPoint sample(pt);
            if (base_member(sample)) continue;
            return phi(sample);
        }
    throw std::domain_error("cusp_point: plane lies in the base locus");
}

// ---------------------------------------------------------------------------
// Differential of the cross-ratio coordinates

// Rank at x of the Jacobian of the four cross ratios
//   g1 = gamma_56, g2 = gamma_65, g3, g4 = the same with x4 <-> x5,
// taken in the affine chart of the last nonvanishing coordinate of x.
// Throws when some cross ratio is undefined at x.
inline std::size_t differential_rank(const ProjPoint& x) {
    auto lin = [](int i, int j) { return MPoly::var(x_var(i)) - MPoly::var(x_var(j)); };
    auto quad = [](int i, int j) {
        return MPoly::var(x_var(i), 2) - MPoly::var(x_var(j), 2);
    };
    struct Ratio {
        MPoly num, den;
    };
    const std::vector<Ratio> gammas = {
        {lin(1, 3) * lin(2, 4), lin(1, 4) * lin(2, 3)},
        {quad(1, 3) * quad(2, 4), quad(1, 4) * quad(2, 3)},
        {lin(1, 3) * lin(2, 5), lin(1, 5) * lin(2, 3)},
        {quad(1, 3) * quad(2, 5), quad(1, 5) * quad(2, 3)},
    };
    int chart = -1;
    for (int i = 4; i >= 0; --i)
        if (!x[i].is_zero()) {
            chart = i;
            break;
        }
    std::map<Var, Rat> at;
    for (int i = 1; i <= 5; ++i) at[x_var(i)] = x[i - 1];
    Matrix<Rat> jac(4, 4);
    for (int gi = 0; gi < 4; ++gi) {
        const Rat q = gammas[gi].den.eval(at);
        if (q.is_zero())
            throw std::domain_error("differential_rank: cross ratio undefined at this point");
        int col = 0;
        for (int j = 1; j <= 5; ++j) {
            if (j - 1 == chart) continue;
            const Var vj = x_var(j);
            // d(P/Q) scaled by Q^2: P' Q - P Q'
            jac(gi, col) = gammas[gi].num.derivative(vj).eval(at) * q -
                           gammas[gi].num.eval(at) * gammas[gi].den.derivative(vj).eval(at);
            ++col;
        }
    }
    return rank(jac);
}

}  // namespace cubics
