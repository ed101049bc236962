#pragma once

// The determinantal family of cubic surfaces over P^4. For a parameter
// point x the fibre is the cubic surface X_x in P(T_x) cut out by
//
//   F(x, X) = det [ 1 ... 1 ; x_i^2 ; x_i^4 ; x_i X_i ; X_i^2 ]
//
// (5x5, columns i = 1..5), a polynomial of bidegree (7,3) in (x, X).
// F(x, X + t*x) = F(x, X), so F defines a cubic on P(T_x) = P^4 mod x.
// The module provides the 27 lines of the fibre (labelled by the Weyl
// orbit structure), their incidences, the 45 tritangent planes, cross
// ratios of tritangents through a line, and Eckardt-point detection.
//
// Lines live on the open locus U = { x : x_i != +-x_j for i != j }.

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

namespace cubics {

inline bool in_u(const Vec& x) {
    if (x.size() != 5) throw std::invalid_argument("in_u: need 5 coordinates");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (x[i] == x[j] || x[i] == -x[j]) return false;
    return true;
}

inline void require_u(const Vec& x) {
    if (!in_u(x)) throw std::domain_error("point outside U: coordinates with x_i = +-x_j");
}

// F(x, X), built once from the 5x5 determinant.
inline const MPoly& surface_poly() {
    static const MPoly F = [] {
        Matrix<MPoly> m(5, 5);
        for (int i = 1; i <= 5; ++i) {
            m(0, i - 1) = MPoly::constant(Rat(1));
            m(1, i - 1) = MPoly::var(x_var(i), 2);
            m(2, i - 1) = MPoly::var(x_var(i), 4);
            m(3, i - 1) = MPoly::var(x_var(i)) * MPoly::var(cap_x_var(i));
            m(4, i - 1) = MPoly::var(cap_x_var(i), 2);
        }
        return det_cofactor(m);
    }();
    return F;
}

// Coefficient f_ij(x) of X_i X_j^2 in F (i != j).
inline MPoly f_coeff(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 5 || j > 5)
        throw std::invalid_argument("f_coeff: need distinct indices in 1..5");
    std::vector<std::pair<Var, int>> powers;
    for (int k = 1; k <= 5; ++k) {
        int e = 0;
        if (k == i) e = 1;
        if (k == j) e = 2;
        powers.emplace_back(cap_x_var(k), e);
    }
    return surface_poly().coeff_of(powers);
}

// F(x, X + t*x) == F(x, X): F descends to P(T_x).
inline bool verify_descend() {
    std::map<Var, MPoly> repl;
    for (int i = 1; i <= 5; ++i)
        repl[cap_x_var(i)] =
            MPoly::var(cap_x_var(i)) + MPoly::var(Var::t) * MPoly::var(x_var(i));
    return surface_poly().substitute(repl) == surface_poly();
}

// ---------------------------------------------------------------------------
// The 27 lines

// Symbolic spanning vectors: the line with label L in the fibre over x is
// <x, s(x), t(x)>. Seed sections are the printed ones; all other labels
// are reached through the Weyl action g: s_{gL}(x) = g * s_L(g^{-1} x).
struct LineSpan {
    std::vector<MPoly> s, t;
};

namespace detail {

inline std::vector<MPoly> const_vec(std::initializer_list<long> v) {
    std::vector<MPoly> out;
    for (long c : v) out.push_back(MPoly::constant(Rat(c)));
    return out;
}

inline MPoly xmon(std::initializer_list<int> idx) {
    MPoly p = MPoly::constant(Rat(1));
    for (int i : idx) p *= MPoly::var(x_var(i));
    return p;
}

inline std::map<LineLabel, LineSpan> build_seed_spans() {
    std::map<LineLabel, LineSpan> seeds;
    {
        LineSpan a1;
        a1.s = const_vec({-1, 1, 1, 1, 1});
        a1.t = {-MPoly::var(x_var(1), 2), MPoly::var(x_var(2), 2), MPoly::var(x_var(3), 2),
                MPoly::var(x_var(4), 2), MPoly::var(x_var(5), 2)};
        seeds[LineLabel::a(1)] = a1;
    }
    {
        // a6 = <x, (1/x_i)_i, (x_i^3)_i> with the inverses cleared.
        LineSpan a6;
        a6.s = {xmon({2, 3, 4, 5}), xmon({1, 3, 4, 5}), xmon({1, 2, 4, 5}), xmon({1, 2, 3, 5}),
                xmon({1, 2, 3, 4})};
        for (int i = 1; i <= 5; ++i) a6.t.push_back(MPoly::var(x_var(i), 3));
        seeds[LineLabel::a(6)] = a6;
    }
    {
        LineSpan b1;
        b1.s = const_vec({1, 0, 0, 0, 0});
        b1.t = {MPoly(), MPoly::var(x_var(2), 3) - xmon({3, 4, 5}),
                MPoly::var(x_var(3), 3) - xmon({2, 4, 5}), MPoly::var(x_var(4), 3) - xmon({2, 3, 5}),
                MPoly::var(x_var(5), 3) - xmon({2, 3, 4})};
        seeds[LineLabel::b(1)] = b1;
    }
    {
        LineSpan b6;
        b6.s = const_vec({1, 1, 1, 1, 1});
        for (int i = 1; i <= 5; ++i) b6.t.push_back(MPoly::var(x_var(i), 2));
        seeds[LineLabel::b(6)] = b6;
    }
    {
        LineSpan c45;
        c45.s = const_vec({1, 1, 1, -1, -1});
        c45.t = {MPoly::var(x_var(1), 2), MPoly::var(x_var(2), 2), MPoly::var(x_var(3), 2),
                 -MPoly::var(x_var(4), 2), -MPoly::var(x_var(5), 2)};
        seeds[LineLabel::c(4, 5)] = c45;
    }
    {
        LineSpan c16;
        c16.s = const_vec({1, 0, 0, 0, 0});
        c16.t = {MPoly(), MPoly::var(x_var(2), 3) + xmon({3, 4, 5}),
                 MPoly::var(x_var(3), 3) + xmon({2, 4, 5}), MPoly::var(x_var(4), 3) + xmon({2, 3, 5}),
                 MPoly::var(x_var(5), 3) + xmon({2, 3, 4})};
        seeds[LineLabel::c(1, 6)] = c16;
    }
    return seeds;
}

}  // namespace detail

// Transport a symbolic line section along g: x |-> g * span(g^{-1} x).
inline LineSpan transport_span(const GroupElem& g, const LineSpan& span) {
    const GroupElem ginv = g.inverse();
    LineSpan out;
    std::vector<MPoly> s, t;
    for (const auto& f : span.s) s.push_back(apply_poly(ginv, f));
    for (const auto& f : span.t) t.push_back(apply_poly(ginv, f));
    out.s = apply_point(g, s);
    out.t = apply_point(g, t);
    return out;
}

// Symbolic spanning vectors for every label (cached).
inline const LineSpan& line_span(const LineLabel& label) {
    static const std::map<LineLabel, LineSpan> table = [] {
        std::map<LineLabel, LineSpan> t = detail::build_seed_spans();
        auto derive = [&t](const LineLabel& target, const LineLabel& seed, const GroupElem& g) {
            t[target] = transport_span(g, t.at(seed));
        };
        for (int i = 2; i <= 5; ++i) {
            const GroupElem s1i = generator("s_1" + std::to_string(i)).elem;
            derive(LineLabel::a(i), LineLabel::a(1), s1i);
            derive(LineLabel::b(i), LineLabel::b(1), s1i);
            derive(LineLabel::c(i, 6), LineLabel::c(1, 6), s1i);
        }
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                const LineLabel target = LineLabel::c(i, j);
                if (t.count(target)) continue;
                derive(target, LineLabel::c(4, 5),
                       WeylGroup::instance().carrier(LineLabel::c(4, 5), target));
            }
        return t;
    }();
    return table.at(label);
}

struct LineInFiber {
    LineLabel label;
    ProjPoint base;      // the parameter point x
    Vec s, t;            // specialised spanning vectors
    Subspace space;      // canonical form of <x, s, t>

    Matrix<Rat> canonical_matrix() const { return space.basis(); }
};

inline LineInFiber line(const LineLabel& label, const ProjPoint& x) {
    require_u(x.coords());
    const LineSpan& span = line_span(label);
    LineInFiber l;
    l.label = label;
    l.base = x;
    for (int i = 0; i < 5; ++i) {
        l.s.push_back(eval_x(span.s[i], x.coords()));
        l.t.push_back(eval_x(span.t[i], x.coords()));
    }
    l.space = Subspace::span({x.coords(), l.s, l.t});
    if (l.space.dim() != 3)
        throw std::domain_error("line: degenerate spanning vectors for " + label.str() + " at " +
                                x.str());
    return l;
}

inline std::map<LineLabel, LineInFiber> all_lines(const ProjPoint& x) {
    std::map<LineLabel, LineInFiber> out;
    for (const auto& l : all_line_labels()) out.emplace(l, line(l, x));
    return out;
}

// Substitute X := S + lam * T into F(x, .) for polynomial vectors S, T.
inline MPoly restrict_to_pencil(const std::vector<MPoly>& S, const std::vector<MPoly>& T) {
    std::map<Var, MPoly> repl;
    for (int i = 1; i <= 5; ++i)
        repl[cap_x_var(i)] = S[i - 1] + MPoly::var(Var::lam) * T[i - 1];
    return surface_poly().substitute(repl);
}

// The line lies on the fibre: F(x, s + lam*t) vanishes identically in lam.
inline bool on_surface(const LineInFiber& l) {
    std::vector<MPoly> S, T;
    for (int i = 0; i < 5; ++i) {
        S.push_back(MPoly::constant(l.s[i]));
        T.push_back(MPoly::constant(l.t[i]));
    }
    std::map<Var, MPoly> xval;
    for (int i = 1; i <= 5; ++i) xval[x_var(i)] = MPoly::constant(l.base[i - 1]);
    return restrict_to_pencil(S, T).substitute(xval).is_zero();
}

// Same check with x kept symbolic; valid for the whole family at once.
inline bool on_surface_symbolic(const LineLabel& label) {
    const LineSpan& span = line_span(label);
    return restrict_to_pencil(span.s, span.t).is_zero();
}

// ---------------------------------------------------------------------------
// Incidence

// 0 = skew, 1 = meet in one point of the fibre, 2 = equal.
inline int incidence(const LineInFiber& a, const LineInFiber& b) {
    const std::size_t d = a.space.sum(b.space).dim();
    if (d == 3) return 2;
    if (d == 4) return 1;
    return 0;
}

// The unique intersection point in P(T_x), as the 2-subspace <x, v>;
// returns a canonical representative v not proportional to x.
inline ProjPoint meet_point(const LineInFiber& a, const LineInFiber& b) {
    if (incidence(a, b) != 1)
        throw std::domain_error("meet_point: lines do not meet in a single point");
    const Subspace w = a.space.intersect(b.space);
    if (w.dim() != 2) throw std::logic_error("meet_point: unexpected intersection dimension");
    const Subspace xline = Subspace::span({a.base.coords()});
    for (std::size_t i = w.dim(); i-- > 0;) {
        const Vec v = w.basis_row(i);
        if (!xline.contains(v)) return ProjPoint(v);
    }
    throw std::logic_error("meet_point: intersection collapsed to the marked point");
}

// Two fibre points <x,u>, <x,v> coincide in P(T_x)?
inline bool fiber_point_eq(const ProjPoint& x, const ProjPoint& u, const ProjPoint& v) {
    return Subspace::span({x.coords(), u.coords()}) == Subspace::span({x.coords(), v.coords()});
}

inline Matrix<Rat> incidence_table(const ProjPoint& x) {
    const auto lines = all_lines(x);
    const auto& labels = all_line_labels();
    Matrix<Rat> m(27, 27);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j) {
            const int code = (i == j) ? 2 : incidence(lines.at(labels[i]), lines.at(labels[j]));
            m(i, j) = Rat(code);
            m(j, i) = Rat(code);
        }
    return m;
}

// ---------------------------------------------------------------------------
// Tritangent planes

// Determinant form for the tritangent {a_i, b6, c_i6}: coefficients of
// det [ 1 ; x_j ; x_j^2 ; X_j ] over the columns j != i.
inline const std::vector<MPoly>& tritangent_seed_form_a(int i) {
    static const std::array<std::vector<MPoly>, 5> table = [] {
        std::array<std::vector<MPoly>, 5> out;
        for (int i = 1; i <= 5; ++i) {
            Matrix<MPoly> m(4, 4);
            int col = 0;
            for (int j = 1; j <= 5; ++j) {
                if (j == i) continue;
                m(0, col) = MPoly::constant(Rat(1));
                m(1, col) = MPoly::var(x_var(j));
                m(2, col) = MPoly::var(x_var(j), 2);
                m(3, col) = MPoly::var(cap_x_var(j));
                ++col;
            }
            const MPoly det = det_cofactor(m);
            std::vector<MPoly> coeffs;
            for (int j = 1; j <= 5; ++j) {
                std::vector<std::pair<Var, int>> powers;
                for (int k = 1; k <= 5; ++k) powers.emplace_back(cap_x_var(k), k == j ? 1 : 0);
                coeffs.push_back(det.coeff_of(powers));
            }
            out[i - 1] = coeffs;
        }
        return out;
    }();
    if (i < 1 || i > 5) throw std::invalid_argument("tritangent_seed_form_a: index");
    return table[i - 1];
}

// Determinant form for the tritangent {a6, b_i, c_i6}: coefficients of
// det [ 1 ; x_j^2 ; x_j^4 ; x_j X_j ] over the columns j != i.
inline const std::vector<MPoly>& tritangent_seed_form_b(int i) {
    static const std::array<std::vector<MPoly>, 5> table = [] {
        std::array<std::vector<MPoly>, 5> out;
        for (int i = 1; i <= 5; ++i) {
            Matrix<MPoly> m(4, 4);
            int col = 0;
            for (int j = 1; j <= 5; ++j) {
                if (j == i) continue;
                m(0, col) = MPoly::constant(Rat(1));
                m(1, col) = MPoly::var(x_var(j), 2);
                m(2, col) = MPoly::var(x_var(j), 4);
                m(3, col) = MPoly::var(x_var(j)) * MPoly::var(cap_x_var(j));
                ++col;
            }
            const MPoly det = det_cofactor(m);
            std::vector<MPoly> coeffs;
            for (int j = 1; j <= 5; ++j) {
                std::vector<std::pair<Var, int>> powers;
                for (int k = 1; k <= 5; ++k) powers.emplace_back(cap_x_var(k), k == j ? 1 : 0);
                coeffs.push_back(det.coeff_of(powers));
            }
            out[i - 1] = coeffs;
        }
        return out;
    }();
    if (i < 1 || i > 5) throw std::invalid_argument("tritangent_seed_form_b: index");
    return table[i - 1];
}

inline Vec eval_form(const std::vector<MPoly>& form, const ProjPoint& x) {
    Vec out;
    for (const auto& f : form) out.push_back(eval_x(f, x.coords()));
    return out;
}

// The linear form in X cutting the tritangent plane of the given triple in
// the fibre over x. The two seed triples use the printed determinant
// forms; every other triple is computed as the annihilator of the span of
// two member lines, in primitive form.
inline Vec tritangent_form(const TritangentLabel& label, const ProjPoint& x) {
    static const TritangentLabel seed_b =
        TritangentLabel::of(LineLabel::a(6), LineLabel::b(1), LineLabel::c(1, 6));
    static const TritangentLabel seed_a =
        TritangentLabel::of(LineLabel::a(1), LineLabel::b(6), LineLabel::c(1, 6));
    if (label == seed_b) return eval_form(tritangent_seed_form_b(1), x);
    if (label == seed_a) return eval_form(tritangent_seed_form_a(1), x);

    const LineInFiber l0 = line(label.lines[0], x);
    const LineInFiber l1 = line(label.lines[1], x);
    const Subspace w = l0.space.sum(l1.space);
    if (w.dim() != 4)
        throw std::domain_error("tritangent_form: member lines do not span a hyperplane");
    const auto ann = null_space(w.basis());
    if (ann.size() != 1) throw std::logic_error("tritangent_form: annihilator not a line");
    const Vec form = ann.front();
    const LineInFiber l2 = line(label.lines[2], x);
    for (std::size_t i = 0; i < 3; ++i)
        if (!dot(form, l2.space.basis_row(i)).is_zero())
            throw std::logic_error("tritangent_form: third line not on the plane");
    return form;
}

// ---------------------------------------------------------------------------
// Cross ratios

// Cross ratio of four tritangent forms through a common line: writing
// t3 = a*t1 + b*t2 and t4 = c*t1 + d*t2, the value is (b*c)/(a*d).
inline Rat cross_ratio_pencil(const LineInFiber& l, const Vec& t1, const Vec& t2, const Vec& t3,
                              const Vec& t4) {
    for (const Vec* f : {&t1, &t2, &t3, &t4})
        for (std::size_t i = 0; i < 3; ++i)
            if (!dot(*f, l.space.basis_row(i)).is_zero())
                throw std::domain_error("cross_ratio_pencil: form does not contain the line");
    if (solve_in_span({t1}, t2))
        throw std::domain_error("cross_ratio_pencil: degenerate pencil (t1, t2 dependent)");
    const auto ab = solve_in_span({t1, t2}, t3);
    const auto cd = solve_in_span({t1, t2}, t4);
    if (!ab || !cd) throw std::domain_error("cross_ratio_pencil: form outside the pencil");
    const Rat a = (*ab)[0], b = (*ab)[1], c = (*cd)[0], d = (*cd)[1];
    if ((a * d).is_zero()) throw std::domain_error("cross_ratio_pencil: degenerate pencil");
    return (b * c) / (a * d);
}

// gamma_56 = (x1-x3)(x2-x4) / ((x1-x4)(x2-x3)), the cross ratio of
// t_16..t_46 through b6.
inline Rat cross_ratio_g56(const ProjPoint& x) {
    const Rat den = (x[0] - x[3]) * (x[1] - x[2]);
    if (den.is_zero()) throw std::domain_error("cross_ratio_g56: undefined at this point");
    return (x[0] - x[2]) * (x[1] - x[3]) / den;
}

// gamma_65: the same with squared coordinates, through a6.
inline Rat cross_ratio_g65(const ProjPoint& x) {
    auto sq = [&](int i) { return x[i] * x[i]; };
    const Rat den = (sq(0) - sq(3)) * (sq(1) - sq(2));
    if (den.is_zero()) throw std::domain_error("cross_ratio_g65: undefined at this point");
    return (sq(0) - sq(2)) * (sq(1) - sq(3)) / den;
}

inline bool is_degenerate_cross_ratio(const Rat& g) { return g.is_zero() || g.is_one(); }

// ---------------------------------------------------------------------------
// Eckardt points

// The three lines of a tritangent triple are concurrent iff their pairwise
// intersection points in the fibre coincide.
inline bool eckardt_concurrent(const TritangentLabel& label, const ProjPoint& x) {
    const LineInFiber l0 = line(label.lines[0], x);
    const LineInFiber l1 = line(label.lines[1], x);
    const LineInFiber l2 = line(label.lines[2], x);
    const ProjPoint m01 = meet_point(l0, l1);
    const ProjPoint m02 = meet_point(l0, l2);
    return fiber_point_eq(x, m01, m02);
}

// Gradient of the specialised cubic at sample points of a line: the fibre
// is smooth along the line iff the gradient never vanishes there (points
// proportional to x are the cone vertex and are skipped).
inline bool gradient_nonzero_on_line(const LineInFiber& l, int samples = 3) {
    static const std::vector<MPoly> grads = [] {
        std::vector<MPoly> g;
        for (int i = 1; i <= 5; ++i) g.push_back(surface_poly().derivative(cap_x_var(i)));
        return g;
    }();
    std::map<Var, Rat> values;
    for (int i = 1; i <= 5; ++i) values[x_var(i)] = l.base[i - 1];
    int found = 0;
    for (long mu = 0; found < samples && mu < samples + 10; ++mu) {
        Vec pt(5);
        for (int i = 0; i < 5; ++i) pt[i] = l.s[i] + Rat(mu) * l.t[i];
        if (is_zero_vec(pt)) continue;
        Matrix<Rat> stack(2, 5);
        stack.set_row(0, l.base.coords());
        stack.set_row(1, pt);
        if (rank(stack) < 2) continue;  // cone vertex
        for (int i = 1; i <= 5; ++i) values[cap_x_var(i)] = pt[i - 1];
        bool nonzero = false;
        for (const auto& g : grads)
            if (!g.eval(values).is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) return false;
        ++found;
    }
    return found == samples;
}

}  // namespace cubics
