#pragma once

// Sparse multivariate polynomials over Q in a fixed variable universe:
//   x1..x5   homogeneous coordinates on P^4 (the parameter point),
//   X1..X5   homogeneous coordinates on the fibre P^4 / P(T_x),
//   lam      pencil parameter along a line,
//   t        deformation parameter for limits,
//   y1..y4   chart coordinates for boundary maps.
// Terms are kept in a map ordered lexicographically on the exponent
// vector (in the variable order above); coefficients are exact rationals
// and never zero.

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat.hpp"

namespace cubics {

enum class Var : int {
    x1 = 0, x2, x3, x4, x5,
    X1, X2, X3, X4, X5,
    lam, t,
    y1, y2, y3, y4,
};

inline constexpr int kNumVars = 16;

inline Var x_var(int i) {
    if (i < 1 || i > 5) throw std::invalid_argument("x_var: index out of range");
    return static_cast<Var>(i - 1);
}
inline Var cap_x_var(int i) {
    if (i < 1 || i > 5) throw std::invalid_argument("cap_x_var: index out of range");
    return static_cast<Var>(4 + i);
}
inline Var y_var(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("y_var: index out of range");
    return static_cast<Var>(11 + i);
}

inline const char* var_name(Var v) {
    static const char* names[kNumVars] = {"x1", "x2", "x3", "x4", "x5", "X1", "X2", "X3",
                                          "X4", "X5", "lam", "t", "y1", "y2", "y3", "y4"};
    return names[static_cast<int>(v)];
}

inline std::optional<Var> var_from_name(const std::string& s) {
    for (int i = 0; i < kNumVars; ++i)
        if (s == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
    return std::nullopt;
}

using ExpVec = std::array<std::uint8_t, kNumVars>;

class MPoly {
  public:
    using TermMap = std::map<ExpVec, Rat>;

    MPoly() = default;

    static MPoly constant(const Rat& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[ExpVec{}] = c;
        return p;
    }
    static MPoly var(Var v, int exp = 1) {
        if (exp < 0) throw std::invalid_argument("MPoly: negative exponent");
        if (exp == 0) return constant(Rat(1));
        MPoly p;
        ExpVec e{};
        e[static_cast<int>(v)] = static_cast<std::uint8_t>(exp);
        p.terms_[e] = Rat(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec{});
    }
    Rat constant_value() const {
        if (!is_constant()) throw std::domain_error("MPoly: not a constant");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    MPoly operator-() const {
        MPoly p(*this);
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }
    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term_(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term_(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e;
                for (int i = 0; i < kNumVars; ++i) {
                    const int s = ea[i] + eb[i];
                    if (s > 255) throw std::overflow_error("MPoly: exponent overflow");
                    e[i] = static_cast<std::uint8_t>(s);
                }
                p.add_term_(e, ca * cb);
            }
        return p;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const Rat& c, const MPoly& a) { return MPoly::constant(c) * a; }
    friend MPoly operator*(const MPoly& a, const Rat& c) { return MPoly::constant(c) * a; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MPoly: negative power");
        MPoly r = constant(Rat(1));
        MPoly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int i = 0; i < kNumVars; ++i) s += e[i];
            if (s > d) d = s;
        }
        return d;  // -1 for the zero polynomial
    }

    int degree_in(Var v) const {
        int d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
        return d;
    }

    // Total degree in a block of variables, if every term agrees; nullopt otherwise.
    std::optional<int> homogeneous_degree(const std::vector<Var>& block) const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (Var v : block) s += e[static_cast<int>(v)];
            if (!d)
                d = s;
            else if (*d != s)
                return std::nullopt;
        }
        return d;
    }

    // Coefficient polynomials collected by the power of one variable.
    std::map<int, MPoly> collect(Var v) const {
        std::map<int, MPoly> out;
        const int vi = static_cast<int>(v);
        for (const auto& [e, c] : terms_) {
            ExpVec r = e;
            const int k = r[vi];
            r[vi] = 0;
            out[k].add_term_(r, c);
        }
        return out;
    }

    // Coefficient of the monomial with the given exponents in a variable
    // block, collected as a polynomial in the remaining variables.
    MPoly coeff_of(const std::vector<std::pair<Var, int>>& powers) const {
        MPoly out;
        for (const auto& [e, c] : terms_) {
            bool match = true;
            for (const auto& [v, k] : powers)
                if (e[static_cast<int>(v)] != k) {
                    match = false;
                    break;
                }
            if (!match) continue;
            ExpVec r = e;
            for (const auto& [v, k] : powers) r[static_cast<int>(v)] = 0;
            out.add_term_(r, c);
        }
        return out;
    }

    MPoly derivative(Var v) const {
        MPoly out;
        const int vi = static_cast<int>(v);
        for (const auto& [e, c] : terms_) {
            if (e[vi] == 0) continue;
            ExpVec r = e;
            const int k = r[vi]--;
            out.add_term_(r, c * Rat(k));
        }
        return out;
    }

    // Substitute polynomials for the listed variables; others stay symbolic.
    MPoly substitute(const std::map<Var, MPoly>& repl) const {
        std::map<Var, std::vector<MPoly>> pows;  // cached powers of each replacement
        MPoly out;
        for (const auto& [e, c] : terms_) {
            MPoly term = MPoly::constant(c);
            ExpVec rest{};
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                const Var v = static_cast<Var>(i);
                auto it = repl.find(v);
                if (it == repl.end()) {
                    rest[i] = e[i];
                    continue;
                }
                auto& table = pows[v];
                if (table.empty()) table = {MPoly::constant(Rat(1)), it->second};
                while (table.size() <= static_cast<std::size_t>(e[i]))
                    table.push_back(table.back() * it->second);
                term *= table[e[i]];
            }
            if (rest != ExpVec{}) {
                MPoly mono;
                mono.terms_[rest] = Rat(1);
                term *= mono;
            }
            out += term;
        }
        return out;
    }

    // Full evaluation; throws if a variable of the polynomial is not assigned.
    Rat eval(const std::map<Var, Rat>& values) const {
        Rat out(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                auto it = values.find(static_cast<Var>(i));
                if (it == values.end())
                    throw std::domain_error(std::string("MPoly::eval: unassigned variable ") +
                                            var_name(static_cast<Var>(i)));
                term *= it->second.pow(e[i]);
            }
            out += term;
        }
        return out;
    }

    std::string str() const;
    static MPoly parse(const std::string& s);

  private:
    void add_term_(const ExpVec& e, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// Polynomial in the x-block evaluated at a length-5 rational point.
inline Rat eval_x(const MPoly& p, const std::vector<Rat>& x) {
    if (x.size() != 5) throw std::invalid_argument("eval_x: need 5 coordinates");
    std::map<Var, Rat> values;
    for (int i = 1; i <= 5; ++i) values[x_var(i)] = x[i - 1];
    return p.eval(values);
}

inline std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Descending lexicographic order for display.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (s.empty())
            s += (c.sign() < 0 ? "-" : "");
        else
            s += (c.sign() < 0 ? " - " : " + ");
        s += c.abs().str();
        for (int i = 0; i < kNumVars; ++i) {
            if (it->first[i] == 0) continue;
            s += " * ";
            s += var_name(static_cast<Var>(i));
            if (it->first[i] > 1) s += "^" + std::to_string(static_cast<int>(it->first[i]));
        }
    }
    return s;
}

inline MPoly MPoly::parse(const std::string& in) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
    };
    auto parse_number = [&]() -> Rat {
        std::size_t start = pos;
        while (pos < in.size() &&
               (std::isdigit(static_cast<unsigned char>(in[pos])) || in[pos] == '/'))
            ++pos;
        if (start == pos) throw std::invalid_argument("MPoly::parse: expected number");
        return Rat::parse(in.substr(start, pos - start));
    };
    auto parse_name = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < in.size() && (std::isalnum(static_cast<unsigned char>(in[pos])))) ++pos;
        return in.substr(start, pos - start);
    };

    MPoly out;
    skip_ws();
    if (pos == in.size()) throw std::invalid_argument("MPoly::parse: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == in.size()) break;
        int sign = 1;
        if (!first || in[pos] == '+' || in[pos] == '-') {
            if (pos == in.size() || (in[pos] != '+' && in[pos] != '-'))
                throw std::invalid_argument("MPoly::parse: expected '+' or '-'");
            sign = (in[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        }
        first = false;
        // term: factors joined by '*'; each factor a number or var[^exp]
        Rat coef(sign);
        ExpVec e{};
        bool any = false;
        while (true) {
            skip_ws();
            if (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) {
                coef *= parse_number();
            } else if (pos < in.size() && std::isalpha(static_cast<unsigned char>(in[pos]))) {
                const std::string name = parse_name();
                const auto v = var_from_name(name);
                if (!v) throw std::invalid_argument("MPoly::parse: unknown variable '" + name + "'");
                int exp = 1;
                skip_ws();
                if (pos < in.size() && in[pos] == '^') {
                    ++pos;
                    skip_ws();
                    std::size_t start = pos;
                    while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
                    if (start == pos) throw std::invalid_argument("MPoly::parse: expected exponent");
                    exp = std::stoi(in.substr(start, pos - start));
                }
                const int idx = static_cast<int>(*v);
                if (e[idx] + exp > 255) throw std::overflow_error("MPoly::parse: exponent overflow");
                e[idx] = static_cast<std::uint8_t>(e[idx] + exp);
            } else {
                throw std::invalid_argument("MPoly::parse: expected factor");
            }
            any = true;
            skip_ws();
            if (pos < in.size() && in[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) throw std::invalid_argument("MPoly::parse: empty term");
        MPoly mono;
        mono.terms_[e] = Rat(1);
        out += coef * mono;
    }
    return out;
}

inline std::string to_string(const MPoly& p) { return p.str(); }

}  // namespace cubics
