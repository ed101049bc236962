#pragma once

// Divisor-class bookkeeping on the blowup Y~ of P^4 along the base locus
// of Phi, and on the target moduli space. Upstairs classes are spanned by
// the hyperplane class H and the exceptional divisors over the 16 points
// p_i, the 5 coordinate points q_j, the 10 lines m and the 40 lines l.
// Downstairs classes are spanned by the 36 boundary classes (16 images of
// the E_p plus 20 images of root hyperplanes) and the 5 tritangent classes
// T_j, together with the symmetrized sums Bhat and That. Everything is
// exact linear algebra over Q on formal symbols.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "classify.hpp"
#include "matrix.hpp"
#include "projpoint.hpp"
#include "rat.hpp"

namespace cubics {

enum class SymKind { H, Ep, Eq, Em, El, Bp, Bh, T, Bhat, That };

struct Symbol {
    SymKind kind;
    int a = 0;  // 1-based index; for Bh the smaller coordinate
    int b = 0;  // for Bh the larger coordinate
    int sign = 0;  // for Bh: +1 means x_a - x_b, -1 means x_a + x_b

    std::string name() const {
        switch (kind) {
            case SymKind::H: return "H";
            case SymKind::Ep: return "E_p" + std::to_string(a);
            case SymKind::Eq: return "E_q" + std::to_string(a);
            case SymKind::Em: return "E_m" + std::to_string(a);
            case SymKind::El: return "E_l" + std::to_string(a);
            case SymKind::Bp: return "B_p" + std::to_string(a);
            case SymKind::Bh:
                return "B_h" + std::to_string(a) + std::to_string(b) + (sign > 0 ? "p" : "m");
            case SymKind::T: return "T" + std::to_string(a);
            case SymKind::Bhat: return "Bhat";
            case SymKind::That: return "That";
        }
        throw std::logic_error("Symbol::name: bad kind");
    }
    bool operator<(const Symbol& o) const {
        return std::tie(kind, a, b, sign) < std::tie(o.kind, o.a, o.b, o.sign);
    }
    bool operator==(const Symbol& o) const {
        return kind == o.kind && a == o.a && b == o.b && o.sign == sign;
    }
    bool is_upstairs() const {
        return kind == SymKind::H || kind == SymKind::Ep || kind == SymKind::Eq ||
               kind == SymKind::Em || kind == SymKind::El;
    }
};

inline Symbol sym_H() { return {SymKind::H}; }
inline Symbol sym_Ep(int i) { return {SymKind::Ep, i}; }
inline Symbol sym_Eq(int j) { return {SymKind::Eq, j}; }
inline Symbol sym_Em(int i) { return {SymKind::Em, i}; }
inline Symbol sym_El(int i) { return {SymKind::El, i}; }
inline Symbol sym_Bp(int i) { return {SymKind::Bp, i}; }
inline Symbol sym_Bh(int i, int j, int sign) {
    if (i > j) std::swap(i, j);
    return {SymKind::Bh, i, j, sign >= 0 ? 1 : -1};
}
inline Symbol sym_T(int j) { return {SymKind::T, j}; }
inline Symbol sym_Bhat() { return {SymKind::Bhat}; }
inline Symbol sym_That() { return {SymKind::That}; }

class DivClass {
public:
    DivClass() = default;
    DivClass(Symbol s, Rat c) {
        if (!c.is_zero()) terms_[s] = c;
    }
    explicit DivClass(Symbol s) : DivClass(s, Rat(1)) {}

    const std::map<Symbol, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Symbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    DivClass& operator+=(const DivClass& o) {
        for (const auto& [s, c] : o.terms_) {
            Rat& v = terms_[s];
            v += c;
            if (v.is_zero()) terms_.erase(s);
        }
        return *this;
    }
    DivClass& operator-=(const DivClass& o) {
        for (const auto& [s, c] : o.terms_) {
            Rat& v = terms_[s];
            v -= c;
            if (v.is_zero()) terms_.erase(s);
        }
        return *this;
    }
    DivClass& operator*=(const Rat& k) {
        if (k.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, c] : terms_) c *= k;
        return *this;
    }
    friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
    friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
    friend DivClass operator*(const Rat& k, DivClass a) { return a *= k; }
    friend DivClass operator-(DivClass a) { return a *= Rat(-1); }
    bool operator==(const DivClass& o) const { return terms_ == o.terms_; }
    bool operator!=(const DivClass& o) const { return !(*this == o); }

    bool all_upstairs() const {
        for (const auto& [s, c] : terms_)
            if (!s.is_upstairs()) return false;
        return true;
    }

    // "{B_h12p: 2, T1: -1}", sorted by symbol name
    std::string str() const {
        std::vector<std::pair<std::string, std::string>> named;
        for (const auto& [s, c] : terms_) named.emplace_back(s.name(), c.str());
        std::sort(named.begin(), named.end());
        std::string out = "{";
        for (std::size_t i = 0; i < named.size(); ++i) {
            if (i) out += ", ";
            out += named[i].first + ": " + named[i].second;
        }
        return out + "}";
    }

private:
    std::map<Symbol, Rat> terms_;
};

// ---------------------------------------------------------------------------
// Hyperplanes and strict transforms

struct Hyperplane {
    Vec normal;  // the hyperplane is { x : normal . x = 0 }
    std::string desc;

    static Hyperplane coordinate(int i) {
        if (i < 1 || i > 5) throw std::invalid_argument("Hyperplane::coordinate: index 1..5");
        Vec n(5, Rat(0));
        n[i - 1] = Rat(1);
        return {n, "x" + std::to_string(i) + " = 0"};
    }
    // sign +1: x_i = x_j; sign -1: x_i = -x_j
    static Hyperplane root(int i, int j, int sign) {
        if (i < 1 || i > 5 || j < 1 || j > 5 || i == j)
            throw std::invalid_argument("Hyperplane::root: need distinct indices 1..5");
        Vec n(5, Rat(0));
        n[i - 1] = Rat(1);
        n[j - 1] = sign >= 0 ? Rat(-1) : Rat(1);
        return {n, "x" + std::to_string(i) + (sign >= 0 ? " = x" : " = -x") + std::to_string(j)};
    }
    bool contains(const ProjPoint& x) const { return dot(normal, x.coords()).is_zero(); }
};

// Index of a point inside the sorted 16-point orbit.
inline int p_point_index(const ProjPoint& p) {
    const auto& pts = base_locus().p_points;
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || !(*it == p)) throw std::invalid_argument("p_point_index: not a p point");
    return static_cast<int>(it - pts.begin()) + 1;
}

// Class of the strict transform of a hyperplane on the blowup: H minus
// the exceptional class of every blown-up point the hyperplane passes
// through. Memberships are computed from the orbit coordinates.
inline DivClass strict_transform_hyperplane(const Hyperplane& h) {
    DivClass out{sym_H()};
    const auto& b = base_locus();
    for (int j = 1; j <= 5; ++j)
        if (h.contains(b.q_points[j - 1])) out -= DivClass(sym_Eq(j));
    for (std::size_t i = 0; i < b.p_points.size(); ++i)
        if (h.contains(b.p_points[i])) out -= DivClass(sym_Ep(static_cast<int>(i) + 1));
    return out;
}

// ---------------------------------------------------------------------------
// Pushforward along Phi

// H -> T1+...+T5, E_{q_j} -> T_j, E_{p_i} -> B_{p_i}, E_m -> 0, E_l -> 0.
inline DivClass pushforward(const DivClass& c) {
    if (!c.all_upstairs())
        throw std::invalid_argument("pushforward: class contains downstairs symbols");
    DivClass out;
    for (const auto& [s, coef] : c.terms()) {
        switch (s.kind) {
            case SymKind::H:
                for (int j = 1; j <= 5; ++j) out += DivClass(sym_T(j), coef);
                break;
            case SymKind::Eq: out += DivClass(sym_T(s.a), coef); break;
            case SymKind::Ep: out += DivClass(sym_Bp(s.a), coef); break;
            case SymKind::Em:
            case SymKind::El: break;  // contracted by Phi
            default: throw std::logic_error("pushforward: unreachable");
        }
    }
    return out;
}

// Degree of Phi onto its image: the cardinality of a generic fibre.
inline long classifying_map_degree() {
    static const long deg = [] {
        const ProjPoint x{1, 2, 3, 4, 5};
        return static_cast<long>(fiber(phi(x)).size());
    }();
    return deg;
}

// ---------------------------------------------------------------------------
// The tritangent-boundary relation

// Clear denominators of the weight pair (boundary/36, tritangent/45) to a
// coprime integer pair (cb, ct), read as  cb * Bhat = ct * That.
inline std::pair<Int, Int> relation_from_counts(const Rat& boundary_count,
                                                const Rat& tritangent_count) {
    const Rat a = boundary_count / Rat(36);
    const Rat b = tritangent_count / Rat(45);
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("relation_from_counts: degenerate counts");
    const Int l = lcm(a.den(), b.den());
    Int ca = (a * Rat(l)).num();
    Int cb = (b * Rat(l)).num();
    const Int g = gcd(ca, cb);
    return {ca / g, cb / g};
}

struct TbRelation {
    Hyperplane hyperplane;
    DivClass strict_transform;  // upstairs
    DivClass pushed;            // downstairs: T_i + T_j - sum of B_p's
    long map_degree = 0;
    Rat boundary_count;    // map_degree + number of B_p terms
    Rat tritangent_count;  // number of T terms
    Int cleared_boundary;  // 25
    Int cleared_tritangent;  // 4
    DivClass relation;     // cleared_boundary * Bhat - cleared_tritangent * That
    bool holds = false;    // relation is 25 Bhat = 4 That
};

// Derive the symmetrized boundary-tritangent relation from the root
// hyperplane x_i = (sign) x_j. The pushforward of the strict transform
// equals deg(Phi) times the boundary class of the hyperplane's image, so
//   deg * B_h + (p-points on h) * B_p's = T_i + T_j,
// and averaging over the group orbits weights boundary classes by 1/36
// and tritangent classes by 1/45.
inline TbRelation verify_tb_relation(int i, int j, int sign) {
    TbRelation r{Hyperplane::root(i, j, sign)};
    r.strict_transform = strict_transform_hyperplane(r.hyperplane);
    r.pushed = pushforward(r.strict_transform);
    r.map_degree = classifying_map_degree();

    // deg * B_h - pushed  =  deg * B_h + sum B_p - sum T  =  0
    DivClass rel = DivClass(sym_Bh(i, j, sign), Rat(r.map_degree)) - r.pushed;
    Rat boundary(0), tritangent(0);
    for (const auto& [s, c] : rel.terms()) {
        if (s.kind == SymKind::Bp || s.kind == SymKind::Bh) {
            if (c.sign() <= 0) throw std::logic_error("verify_tb_relation: boundary sign");
            boundary += c;
        } else if (s.kind == SymKind::T) {
            if (c.sign() >= 0) throw std::logic_error("verify_tb_relation: tritangent sign");
            tritangent -= c;
        } else {
            throw std::logic_error("verify_tb_relation: unexpected symbol");
        }
    }
    r.boundary_count = boundary;
    r.tritangent_count = tritangent;
    std::tie(r.cleared_boundary, r.cleared_tritangent) = relation_from_counts(boundary, tritangent);
    r.relation = DivClass(sym_Bhat(), Rat(r.cleared_boundary)) -
                 DivClass(sym_That(), Rat(r.cleared_tritangent));
    r.holds = (r.cleared_boundary == 25 && r.cleared_tritangent == 4);
    return r;
}

// ---------------------------------------------------------------------------
// Rank of the downstairs class group

inline const std::vector<DivClass>& upstairs_generators() {
    static const std::vector<DivClass> gens = [] {
        std::vector<DivClass> g;
        g.emplace_back(sym_H());
        for (int i = 1; i <= 16; ++i) g.emplace_back(sym_Ep(i));
        for (int j = 1; j <= 5; ++j) g.emplace_back(sym_Eq(j));
        for (int i = 1; i <= 10; ++i) g.emplace_back(sym_Em(i));
        for (int i = 1; i <= 40; ++i) g.emplace_back(sym_El(i));
        return g;
    }();
    return gens;
}

// Rank of the span of the pushforwards of all 72 upstairs generators
// inside the space spanned by B_p1..B_p16, T1..T5; equals 21.
inline std::size_t picard_rank_check() {
    const auto& gens = upstairs_generators();
    Matrix<Rat> m(gens.size(), 21);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        const DivClass down = pushforward(gens[r]);
        for (const auto& [s, c] : down.terms()) {
            if (s.kind == SymKind::Bp) m(r, s.a - 1) = c;
            else if (s.kind == SymKind::T) m(r, 16 + s.a - 1) = c;
            else throw std::logic_error("picard_rank_check: unexpected symbol");
        }
    }
    return rank(m);
}

}  // namespace cubics
