#pragma once

// Points of projective space over Q, stored in canonical form: coprime
// integer coordinates whose first nonzero entry is positive. Two points
// are equal iff their canonical coordinates coincide.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rat.hpp"

namespace cubics {

class ProjPoint {
  public:
    ProjPoint() = default;
    explicit ProjPoint(const Vec& coords) : c_(primitive(coords)) {}
    ProjPoint(std::initializer_list<long> coords) {
        Vec v;
        for (long x : coords) v.push_back(Rat(x));
        c_ = primitive(v);
    }

    static ProjPoint from_ints(const std::vector<long>& coords) {
        Vec v;
        for (long x : coords) v.push_back(Rat(x));
        return ProjPoint(v);
    }

    std::size_t dim() const { return c_.size(); }  // number of coordinates
    const Rat& operator[](std::size_t i) const { return c_.at(i); }
    const Vec& coords() const { return c_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return a.c_ != b.c_; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] < b.c_[i]) return true;
            if (b.c_[i] < a.c_[i]) return false;
        }
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += " : ";
            s += c_[i].str();
        }
        return s + ")";
    }

    static ProjPoint parse(const std::string& in) {
        std::string s = in;
        if (!s.empty() && s.front() == '(') s.erase(s.begin());
        if (!s.empty() && s.back() == ')') s.pop_back();
        Vec v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ':')) {
            std::string trimmed;
            for (char ch : tok)
                if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
            if (trimmed.empty()) throw std::invalid_argument("ProjPoint: empty coordinate");
            v.push_back(Rat::parse(trimmed));
        }
        if (v.empty()) throw std::invalid_argument("ProjPoint: no coordinates");
        return ProjPoint(v);
    }

  private:
    Vec c_;
};

inline std::string to_string(const ProjPoint& p) { return p.str(); }

}  // namespace cubics
