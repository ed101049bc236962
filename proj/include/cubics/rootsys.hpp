#pragma once

// The Weyl group W(D5) realised as signed 5x5 permutations with an even
// number of sign changes (order 1920), its action on the 27 line labels
// a1..a6, b1..b6, c_ij of a cubic surface, the 45 tritangent labels, and
// the finite label sets over F3 used for boundary/tritangent/cusp loci.
//
// Conventions. An element g = (pi, eps) is the substitution
//     x_i  |->  eps_i * x_{pi(i)},
// equivalently the point action (g*v)_i = eps_i * v_{pi(i)}. Composition
// is chosen so that the point action is a left action:
// (compose(g,h))*v = g*(h*v). On polynomials f |-> f(g*x) this reads
// contravariantly, which the tests exercise explicitly.
//
// The 20 generators are the transpositions s_ij (swap x_i, x_j) and the
// reflections s_klm (x_i -> -x_j, x_j -> -x_i for {i,j} the complement
// of {k,l,m} in {1..5}). Their action on line labels: s_ij permutes the
// indices i,j; s_klm exchanges a_k <-> c_lm, a_l <-> c_km, a_m <-> c_kl,
// b_i <-> c_j6, b_j <-> c_i6, b6 <-> c_ij and fixes the rest. The action
// of an arbitrary element is obtained by closing the generator tables
// under composition; the closure verifies on the fly that the table is a
// well defined homomorphism.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mpoly.hpp"
#include "rat.hpp"

namespace cubics {

struct GroupElem {
    std::array<std::uint8_t, 5> perm{0, 1, 2, 3, 4};  // pi, 0-based
    std::array<std::int8_t, 5> sign{1, 1, 1, 1, 1};   // eps

    static GroupElem identity() { return GroupElem{}; }

    bool is_identity() const { return *this == GroupElem{}; }

    // Unique code: permutation in base 5, signs as a bit mask.
    std::uint32_t code() const {
        std::uint32_t c = 0;
        for (int i = 0; i < 5; ++i) c = c * 5 + perm[i];
        for (int i = 0; i < 5; ++i) c = (c << 1) | (sign[i] < 0 ? 1u : 0u);
        return c;
    }

    friend bool operator==(const GroupElem& a, const GroupElem& b) {
        return a.perm == b.perm && a.sign == b.sign;
    }
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }
    friend bool operator<(const GroupElem& a, const GroupElem& b) { return a.code() < b.code(); }

    GroupElem inverse() const {
        GroupElem r;
        for (int i = 0; i < 5; ++i) {
            r.perm[perm[i]] = static_cast<std::uint8_t>(i);
            r.sign[perm[i]] = sign[i];
        }
        return r;
    }

    // Determinant of the signed permutation matrix.
    int det() const {
        int d = 1;
        std::array<bool, 5> seen{};
        for (int i = 0; i < 5; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) d = -d;
        }
        for (int i = 0; i < 5; ++i) d *= sign[i];
        return d;
    }

    std::string str() const;
    static GroupElem parse(const std::string& s);
};

// Left-action composition: (compose(g,h))*v == g*(h*v).
inline GroupElem compose(const GroupElem& g, const GroupElem& h) {
    GroupElem r;
    for (int i = 0; i < 5; ++i) {
        r.perm[i] = h.perm[g.perm[i]];
        r.sign[i] = static_cast<std::int8_t>(g.sign[i] * h.sign[g.perm[i]]);
    }
    return r;
}

template <typename T>
std::vector<T> apply_point(const GroupElem& g, const std::vector<T>& v) {
    if (v.size() != 5) throw std::invalid_argument("apply_point: need 5 coordinates");
    std::vector<T> out(5);
    for (int i = 0; i < 5; ++i) out[i] = (g.sign[i] < 0) ? T(-v[g.perm[i]]) : v[g.perm[i]];
    return out;
}

// Variable substitution x_i -> eps_i x_{pi(i)} (and likewise X_i when requested).
inline std::map<Var, MPoly> subst_map(const GroupElem& g, bool with_cap_x = false) {
    std::map<Var, MPoly> m;
    for (int i = 0; i < 5; ++i) {
        MPoly img = MPoly::var(x_var(g.perm[i] + 1));
        if (g.sign[i] < 0) img = -img;
        m[x_var(i + 1)] = img;
        if (with_cap_x) {
            MPoly imgX = MPoly::var(cap_x_var(g.perm[i] + 1));
            if (g.sign[i] < 0) imgX = -imgX;
            m[cap_x_var(i + 1)] = imgX;
        }
    }
    return m;
}

// f |-> f(g*x): pullback of f along the point action of g.
inline MPoly apply_poly(const GroupElem& g, const MPoly& f, bool with_cap_x = false) {
    return f.substitute(subst_map(g, with_cap_x));
}

inline std::string GroupElem::str() const {
    std::string s;
    std::array<bool, 5> seen{};
    for (int i = 0; i < 5; ++i) {
        if (seen[i] || perm[i] == i) {
            seen[i] = true;
            continue;
        }
        s += "(";
        bool first = true;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
        }
        s += ")";
    }
    if (s.empty()) s = "()";
    s += "|";
    for (int i = 0; i < 5; ++i) s += (sign[i] < 0 ? '-' : '+');
    return s;
}

inline GroupElem GroupElem::parse(const std::string& in) {
    const auto bar = in.find('|');
    if (bar == std::string::npos || in.size() - bar - 1 != 5)
        throw std::invalid_argument("GroupElem: expected '(cycles)|sssss'");
    GroupElem g;
    for (int i = 0; i < 5; ++i) {
        const char c = in[bar + 1 + i];
        if (c == '-')
            g.sign[i] = -1;
        else if (c != '+')
            throw std::invalid_argument("GroupElem: bad sign character");
    }
    std::size_t pos = 0;
    std::array<bool, 5> moved{};
    while (pos < bar) {
        if (std::isspace(static_cast<unsigned char>(in[pos]))) {
            ++pos;
            continue;
        }
        if (in[pos] != '(') throw std::invalid_argument("GroupElem: expected '('");
        ++pos;
        std::vector<int> cyc;
        while (pos < bar && in[pos] != ')') {
            if (std::isspace(static_cast<unsigned char>(in[pos]))) {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(in[pos])))
                throw std::invalid_argument("GroupElem: expected index");
            const int v = in[pos] - '1';
            if (v < 0 || v > 4) throw std::invalid_argument("GroupElem: index out of range");
            cyc.push_back(v);
            ++pos;
        }
        if (pos == bar) throw std::invalid_argument("GroupElem: unterminated cycle");
        ++pos;  // ')'
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (cyc.size() < 2) break;
            if (moved[from]) throw std::invalid_argument("GroupElem: repeated index in cycles");
            moved[from] = true;
            g.perm[from] = static_cast<std::uint8_t>(to);
        }
    }
    int neg = 0;
    for (int i = 0; i < 5; ++i)
        if (g.sign[i] < 0) ++neg;
    if (neg % 2 != 0) throw std::invalid_argument("GroupElem: odd number of sign changes");
    return g;
}

inline std::string to_string(const GroupElem& g) { return g.str(); }

// ---------------------------------------------------------------------------
// Line labels

struct LineLabel {
    char kind = 'a';  // 'a', 'b' or 'c'
    int i = 1, j = 0;  // a_i, b_i use i in 1..6; c_ij uses 1 <= i < j <= 6

    static LineLabel a(int i) { return make_('a', i, 0); }
    static LineLabel b(int i) { return make_('b', i, 0); }
    static LineLabel c(int i, int j) {
        if (i > j) std::swap(i, j);
        if (i == j) throw std::invalid_argument("LineLabel: c needs distinct indices");
        return make_('c', i, j);
    }

    friend bool operator==(const LineLabel& a, const LineLabel& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const LineLabel& a, const LineLabel& b) { return !(a == b); }
    friend bool operator<(const LineLabel& a, const LineLabel& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    std::string str() const {
        std::string s(1, kind);
        s += std::to_string(i);
        if (kind == 'c') s += std::to_string(j);
        return s;
    }

    static LineLabel parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("LineLabel: '" + s + "'");
        const char k = s[0];
        if (k == 'a' || k == 'b') {
            if (s.size() != 2 || s[1] < '1' || s[1] > '6')
                throw std::invalid_argument("LineLabel: '" + s + "'");
            return make_(k, s[1] - '0', 0);
        }
        if (k == 'c' && s.size() == 3) {
            const int i = s[1] - '0', j = s[2] - '0';
            if (i < 1 || j < 1 || i > 6 || j > 6 || i >= j)
                throw std::invalid_argument("LineLabel: '" + s + "'");
            return make_('c', i, j);
        }
        throw std::invalid_argument("LineLabel: '" + s + "'");
    }

  private:
    static LineLabel make_(char k, int i, int j) {
        if (i < 1 || i > 6) throw std::invalid_argument("LineLabel: index out of range");
        LineLabel l;
        l.kind = k;
        l.i = i;
        l.j = j;
        return l;
    }
};

inline std::string to_string(const LineLabel& l) { return l.str(); }

// Fixed order: a1..a6, b1..b6, c12, c13, ..., c56.
inline const std::vector<LineLabel>& all_line_labels() {
    static const std::vector<LineLabel> labels = [] {
        std::vector<LineLabel> v;
        for (int i = 1; i <= 6; ++i) v.push_back(LineLabel::a(i));
        for (int i = 1; i <= 6; ++i) v.push_back(LineLabel::b(i));
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) v.push_back(LineLabel::c(i, j));
        return v;
    }();
    return labels;
}

inline int label_index(const LineLabel& l) {
    if (l.kind == 'a') return l.i - 1;
    if (l.kind == 'b') return 5 + l.i;
    int idx = 12;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            if (l.i == i && l.j == j) return idx;
            ++idx;
        }
    throw std::invalid_argument("label_index: bad label");
}

using LabelPerm = std::array<std::uint8_t, 27>;

// ---------------------------------------------------------------------------
// Generators

struct Generator {
    GroupElem elem;
    LabelPerm labels;
    std::string name;
};

namespace detail {

inline LabelPerm identity_label_perm() {
    LabelPerm p{};
    for (int i = 0; i < 27; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

inline void set_swap(LabelPerm& p, const LineLabel& u, const LineLabel& v) {
    const int a = label_index(u), b = label_index(v);
    p[a] = static_cast<std::uint8_t>(b);
    p[b] = static_cast<std::uint8_t>(a);
}

}  // namespace detail

// The 20 generators: s_ij (i<j<=5) and s_klm (k<l<m<=5).
inline const std::vector<Generator>& weyl_generators() {
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> out;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                Generator g;
                g.name = "s_" + std::to_string(i) + std::to_string(j);
                g.elem.perm[i - 1] = static_cast<std::uint8_t>(j - 1);
                g.elem.perm[j - 1] = static_cast<std::uint8_t>(i - 1);
                g.labels = detail::identity_label_perm();
                auto swap_idx = [&](int k) { return k == i ? j : (k == j ? i : k); };
                for (int k = 1; k <= 5; ++k) {
                    if (swap_idx(k) <= k) continue;
                    detail::set_swap(g.labels, LineLabel::a(k), LineLabel::a(swap_idx(k)));
                    detail::set_swap(g.labels, LineLabel::b(k), LineLabel::b(swap_idx(k)));
                }
                LabelPerm cmap = detail::identity_label_perm();
                for (int k = 1; k <= 6; ++k)
                    for (int l = k + 1; l <= 6; ++l) {
                        int k2 = k <= 5 ? swap_idx(k) : k, l2 = l <= 5 ? swap_idx(l) : l;
                        if (k2 > l2) std::swap(k2, l2);
                        cmap[label_index(LineLabel::c(k, l))] =
                            static_cast<std::uint8_t>(label_index(LineLabel::c(k2, l2)));
                    }
                for (int idx = 12; idx < 27; ++idx) g.labels[idx] = cmap[idx];
                out.push_back(g);
            }
        for (int k = 1; k <= 5; ++k)
            for (int l = k + 1; l <= 5; ++l)
                for (int m = l + 1; m <= 5; ++m) {
                    Generator g;
                    g.name = "s_" + std::to_string(k) + std::to_string(l) + std::to_string(m);
                    std::vector<int> comp;
                    for (int i = 1; i <= 5; ++i)
                        if (i != k && i != l && i != m) comp.push_back(i);
                    const int i = comp[0], j = comp[1];
                    g.elem.perm[i - 1] = static_cast<std::uint8_t>(j - 1);
                    g.elem.perm[j - 1] = static_cast<std::uint8_t>(i - 1);
                    g.elem.sign[i - 1] = g.elem.sign[j - 1] = -1;
                    g.labels = detail::identity_label_perm();
                    detail::set_swap(g.labels, LineLabel::a(k), LineLabel::c(l, m));
                    detail::set_swap(g.labels, LineLabel::a(l), LineLabel::c(k, m));
                    detail::set_swap(g.labels, LineLabel::a(m), LineLabel::c(k, l));
                    detail::set_swap(g.labels, LineLabel::b(i), LineLabel::c(j, 6));
                    detail::set_swap(g.labels, LineLabel::b(j), LineLabel::c(i, 6));
                    detail::set_swap(g.labels, LineLabel::b(6), LineLabel::c(i, j));
                    out.push_back(g);
                }
        return out;
    }();
    return gens;
}

inline const Generator& generator(const std::string& name) {
    for (const auto& g : weyl_generators())
        if (g.name == name) return g;
    throw std::invalid_argument("generator: unknown name '" + name + "'");
}

// ---------------------------------------------------------------------------
// The full group with its label action

class WeylGroup {
  public:
    static const WeylGroup& instance() {
        static const WeylGroup w;
        return w;
    }

    std::size_t size() const { return elems_.size(); }
    const std::vector<GroupElem>& elements() const { return elems_; }

    std::size_t index_of(const GroupElem& g) const {
        auto it = index_.find(g.code());
        if (it == index_.end()) throw std::domain_error("WeylGroup: element not in W(D5)");
        return it->second;
    }

    bool contains(const GroupElem& g) const { return index_.find(g.code()) != index_.end(); }

    LineLabel act(const GroupElem& g, const LineLabel& l) const {
        const LabelPerm& p = label_perms_[index_of(g)];
        return all_line_labels()[p[label_index(l)]];
    }

    // Some element carrying `from` to `to`.
    GroupElem carrier(const LineLabel& from, const LineLabel& to) const {
        const int fi = label_index(from), ti = label_index(to);
        for (std::size_t k = 0; k < elems_.size(); ++k)
            if (label_perms_[k][fi] == ti) return elems_[k];
        throw std::domain_error("WeylGroup: labels lie in different orbits");
    }

    // All elements carrying `from` to `to`.
    std::vector<GroupElem> carriers(const LineLabel& from, const LineLabel& to) const {
        std::vector<GroupElem> out;
        const int fi = label_index(from), ti = label_index(to);
        for (std::size_t k = 0; k < elems_.size(); ++k)
            if (label_perms_[k][fi] == ti) out.push_back(elems_[k]);
        return out;
    }

  private:
    WeylGroup() {
        // Breadth-first closure of the generators. Reaching a known element
        // along a new word must reproduce its label permutation; this checks
        // that the generator tables define a genuine action.
        const GroupElem id = GroupElem::identity();
        elems_.push_back(id);
        label_perms_.push_back(detail::identity_label_perm());
        index_.emplace(id.code(), 0);
        std::deque<std::size_t> queue{0};
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            const GroupElem ge = elems_[cur];
            const LabelPerm gp = label_perms_[cur];
            for (const auto& gen : weyl_generators()) {
                const GroupElem ne = compose(gen.elem, ge);
                LabelPerm np;
                for (int l = 0; l < 27; ++l) np[l] = gen.labels[gp[l]];
                auto it = index_.find(ne.code());
                if (it == index_.end()) {
                    index_.emplace(ne.code(), elems_.size());
                    elems_.push_back(ne);
                    label_perms_.push_back(np);
                    queue.push_back(elems_.size() - 1);
                } else if (label_perms_[it->second] != np) {
                    throw std::logic_error("WeylGroup: label action is not well defined");
                }
            }
        }
    }

    std::vector<GroupElem> elems_;
    std::vector<LabelPerm> label_perms_;
    std::unordered_map<std::uint32_t, std::size_t> index_;
};

inline LineLabel act_on_label(const GroupElem& g, const LineLabel& l) {
    return WeylGroup::instance().act(g, l);
}

inline std::set<LineLabel> label_orbit(const LineLabel& seed) {
    std::set<LineLabel> orbit{seed};
    std::deque<LineLabel> queue{seed};
    while (!queue.empty()) {
        const LineLabel cur = queue.front();
        queue.pop_front();
        for (const auto& gen : weyl_generators()) {
            const LineLabel img = all_line_labels()[gen.labels[label_index(cur)]];
            if (orbit.insert(img).second) queue.push_back(img);
        }
    }
    return orbit;
}

// ---------------------------------------------------------------------------
// Tritangent labels

struct TritangentLabel {
    std::array<LineLabel, 3> lines;  // sorted

    static TritangentLabel of(LineLabel u, LineLabel v, LineLabel w) {
        std::array<LineLabel, 3> arr{u, v, w};
        std::sort(arr.begin(), arr.end());
        TritangentLabel t;
        t.lines = arr;
        if (!t.valid_()) throw std::invalid_argument("TritangentLabel: not a tritangent triple");
        return t;
    }

    friend bool operator==(const TritangentLabel& a, const TritangentLabel& b) {
        return a.lines == b.lines;
    }
    friend bool operator<(const TritangentLabel& a, const TritangentLabel& b) {
        return a.lines < b.lines;
    }

    std::string str() const {
        return "{" + lines[0].str() + "," + lines[1].str() + "," + lines[2].str() + "}";
    }

    static TritangentLabel parse(const std::string& in) {
        std::string s = in;
        if (!s.empty() && s.front() == '{') s.erase(s.begin());
        if (!s.empty() && s.back() == '}') s.pop_back();
        std::vector<LineLabel> parts;
        std::string tok;
        for (char ch : s + ",") {
            if (ch == ',') {
                if (!tok.empty()) parts.push_back(LineLabel::parse(tok));
                tok.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                tok += ch;
            }
        }
        if (parts.size() != 3) throw std::invalid_argument("TritangentLabel: need 3 labels");
        return of(parts[0], parts[1], parts[2]);
    }

  private:
    bool valid_() const {
        // {a_i, b_j, c_ij} with i != j, or {c_ij, c_kl, c_mn} partitioning {1..6}.
        if (lines[0].kind == 'a' && lines[1].kind == 'b' && lines[2].kind == 'c') {
            const int i = lines[0].i, j = lines[1].i;
            if (i == j) return false;
            return lines[2] == LineLabel::c(i, j);
        }
        if (lines[0].kind == 'c' && lines[1].kind == 'c' && lines[2].kind == 'c') {
            std::set<int> seen;
            for (const auto& l : lines) {
                seen.insert(l.i);
                seen.insert(l.j);
            }
            return seen.size() == 6;
        }
        return false;
    }
};

inline std::string to_string(const TritangentLabel& t) { return t.str(); }

inline const std::vector<TritangentLabel>& all_tritangent_labels() {
    static const std::vector<TritangentLabel> labels = [] {
        std::set<TritangentLabel> s;
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                if (i != j)
                    s.insert(TritangentLabel::of(LineLabel::a(i), LineLabel::b(j),
                                                 LineLabel::c(std::min(i, j), std::max(i, j))));
        const int pairs[15][2] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
                                  {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
        for (int a = 0; a < 15; ++a)
            for (int b = a + 1; b < 15; ++b) {
                std::set<int> used{pairs[a][0], pairs[a][1], pairs[b][0], pairs[b][1]};
                if (used.size() != 4) continue;
                std::vector<int> rest;
                for (int k = 1; k <= 6; ++k)
                    if (!used.count(k)) rest.push_back(k);
                TritangentLabel t = TritangentLabel::of(LineLabel::c(pairs[a][0], pairs[a][1]),
                                                        LineLabel::c(pairs[b][0], pairs[b][1]),
                                                        LineLabel::c(rest[0], rest[1]));
                s.insert(t);
            }
        return std::vector<TritangentLabel>(s.begin(), s.end());
    }();
    return labels;
}

inline TritangentLabel act_on_tritangent(const GroupElem& g, const TritangentLabel& t) {
    return TritangentLabel::of(act_on_label(g, t.lines[0]), act_on_label(g, t.lines[1]),
                               act_on_label(g, t.lines[2]));
}

inline std::set<TritangentLabel> tritangent_orbit(const TritangentLabel& seed) {
    std::set<TritangentLabel> orbit{seed};
    std::deque<TritangentLabel> queue{seed};
    while (!queue.empty()) {
        const TritangentLabel cur = queue.front();
        queue.pop_front();
        for (const auto& gen : weyl_generators()) {
            const TritangentLabel img = act_on_tritangent(gen.elem, cur);
            if (orbit.insert(img).second) queue.push_back(img);
        }
    }
    return orbit;
}

// ---------------------------------------------------------------------------
// Label sets over F3

// A point of P^4(F3): coordinates in {0,1,2}, first nonzero entry scaled to 1.
struct F3Label {
    std::array<std::uint8_t, 5> c{};

    static F3Label of(std::array<int, 5> raw) {
        F3Label l;
        int lead = 0;
        for (int i = 0; i < 5; ++i) {
            int v = ((raw[i] % 3) + 3) % 3;
            l.c[i] = static_cast<std::uint8_t>(v);
            if (lead == 0 && v != 0) lead = v;
        }
        if (lead == 0) throw std::invalid_argument("F3Label: zero vector");
        if (lead == 2)
            for (auto& v : l.c) v = static_cast<std::uint8_t>((2 * v) % 3);
        return l;
    }

    int nonzero_count() const {
        int n = 0;
        for (auto v : c)
            if (v != 0) ++n;
        return n;
    }

    friend bool operator==(const F3Label& a, const F3Label& b) { return a.c == b.c; }
    friend bool operator<(const F3Label& a, const F3Label& b) { return a.c < b.c; }

    // Display uses -1 for the residue 2.
    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 5; ++i) {
            if (i) s += ":";
            s += (c[i] == 2 ? "-1" : std::to_string(static_cast<int>(c[i])));
        }
        return s + ")";
    }
};

inline std::string to_string(const F3Label& l) { return l.str(); }

enum class F3Kind { boundary, tritangent, cusp };

// Orbits under coordinate permutations and sign changes, characterised by
// the number of nonzero coordinates: boundary {2,5}, tritangent {1,4},
// cusp {3}. Sizes 36 / 45 / 40.
inline const std::vector<F3Label>& f3_labels(F3Kind kind) {
    static const std::array<std::vector<F3Label>, 3> tables = [] {
        std::array<std::vector<F3Label>, 3> out;
        std::set<F3Label> all;
        std::array<int, 5> raw{};
        for (int code = 1; code < 243; ++code) {
            int c = code;
            for (int i = 0; i < 5; ++i) {
                raw[i] = c % 3;
                c /= 3;
            }
            all.insert(F3Label::of(raw));
        }
        for (const auto& l : all) {
            const int n = l.nonzero_count();
            if (n == 2 || n == 5)
                out[0].push_back(l);
            else if (n == 1 || n == 4)
                out[1].push_back(l);
            else
                out[2].push_back(l);
        }
        return out;
    }();
    return tables[static_cast<int>(kind)];
}

// The handful of label assignments that are pinned down explicitly:
// each F3 label with the locus it names.
struct F3Assignment {
    F3Kind kind;
    F3Label label;
    std::string locus;
};

inline const std::vector<F3Assignment>& f3_documented_assignments() {
    static const std::vector<F3Assignment> table = {
        {F3Kind::boundary, F3Label::of({0, 0, 0, 1, -1}), "image of the hyperplane x4 = x5"},
        {F3Kind::boundary, F3Label::of({1, -1, 1, -1, 1}),
         "image of the exceptional divisor over the singular point (1:-1:1:-1:1)"},
        {F3Kind::tritangent, F3Label::of({0, 0, 0, 0, 1}), "image of the hyperplane x5 = 0"},
        {F3Kind::tritangent, F3Label::of({0, 1, -1, 1, 1}),
         "image of the cubic x2*x3*x4*x5*(1/x2 - 1/x3 + 1/x4 + 1/x5) + (x2 - x3 + x4 + x5)*x1^2"},
        {F3Kind::cusp, F3Label::of({0, 0, 1, -1, 1}), "image of the plane (s:t:u:-u:u)"},
        {F3Kind::cusp, F3Label::of({1, 1, 0, 0, 1}), "image of the plane (s:s:t:u:s)"},
    };
    return table;
}

}  // namespace cubics
