#pragma once

// Linear subspaces of Q^n represented by their unique reduced row echelon
// basis. Used for lines and planes in P^4 (2- and 3-dimensional subspaces
// of Q^5) and for the 3-space spanned by a line in a fibre together with
// the marked point.

#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rat.hpp"

namespace cubics {

class Subspace {
  public:
    Subspace() = default;

    static Subspace span(const std::vector<Vec>& vectors) {
        if (vectors.empty()) throw std::invalid_argument("Subspace: empty span");
        const std::size_t n = vectors.front().size();
        Matrix<Rat> m(vectors.size(), n);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != n) throw std::invalid_argument("Subspace: ragged vectors");
            m.set_row(i, vectors[i]);
        }
        const Rref r = rref(std::move(m));
        Subspace s;
        s.ambient_ = n;
        s.basis_ = Matrix<Rat>(r.rank(), n);
        for (std::size_t i = 0; i < r.rank(); ++i) s.basis_.set_row(i, r.mat.row(i));
        return s;
    }

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }
    const Matrix<Rat>& basis() const { return basis_; }
    Vec basis_row(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
        Matrix<Rat> m(dim() + 1, ambient_);
        for (std::size_t i = 0; i < dim(); ++i) m.set_row(i, basis_.row(i));
        m.set_row(dim(), v);
        return rank(std::move(m)) == dim();
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_row(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
        for (std::size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_.row(i));
        return span(rows);
    }

    // Intersection computed through annihilators: (U + W)^perp = U^perp cap W^perp.
    Subspace intersect(const Subspace& other) const {
        const auto a = null_space(basis_);
        const auto b = null_space(other.basis_);
        std::vector<Vec> ann = a;
        ann.insert(ann.end(), b.begin(), b.end());
        if (ann.empty()) return *this;  // both spaces are the whole ambient space
        Matrix<Rat> m(ann.size(), ambient_);
        for (std::size_t i = 0; i < ann.size(); ++i) m.set_row(i, ann[i]);
        const auto back = null_space(m);
        if (back.empty()) throw std::domain_error("Subspace: trivial intersection");
        return span(back);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) { return key(a) < key(b); }

    std::string str() const { return to_string(basis_); }

  private:
    static std::string key(const Subspace& s) { return s.str(); }

    std::size_t ambient_ = 0;
    Matrix<Rat> basis_;
};

inline std::string to_string(const Subspace& s) { return s.str(); }

}  // namespace cubics
