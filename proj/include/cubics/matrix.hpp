#pragma once

// Dense matrices over an exact commutative ring, plus the exact linear
// algebra used everywhere else: cofactor determinants (valid over any
// ring, e.g. polynomial entries), Bareiss elimination for rational
// matrices, reduced row echelon form as the canonical representative of
// a row space, and solvers for span membership and null spaces.

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace cubics {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& v : r) data_.push_back(v);
        }
    }
    explicit Matrix(const std::vector<std::vector<T>>& rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.front().size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::vector<T> row(std::size_t i) const {
        assert(i < rows_);
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_row(std::size_t i, const std::vector<T>& r) {
        assert(i < rows_ && r.size() == cols_);
        std::copy(r.begin(), r.end(), data_.begin() + i * cols_);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Determinant by Laplace expansion, memoized on column subsets.
// Works over any exact commutative ring (rationals, polynomials).
template <typename T>
T det_cofactor(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (n == 0 || n > 31) throw std::invalid_argument("det: unsupported size");

    std::unordered_map<std::uint32_t, T> memo;
    // det of the submatrix using rows (n-popcount(mask))..n-1 and the columns in mask
    auto rec = [&](auto&& self, std::uint32_t mask) -> T {
        const int k = __builtin_popcount(mask);
        const std::size_t row = n - static_cast<std::size_t>(k);
        if (k == 1) return m(row, static_cast<std::size_t>(__builtin_ctz(mask)));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        T acc{};
        int idx = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++idx) {
            const std::size_t col = static_cast<std::size_t>(__builtin_ctz(rest));
            T term = m(row, col) * self(self, mask & ~(1u << col));
            if (idx % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (n == 31) ? 0x7fffffffu : ((1u << n) - 1u));
}

// Fraction-free (Bareiss) determinant of a rational matrix.
inline Rat det_bareiss(Matrix<Rat> a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("det: matrix not square");
    Rat prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Rat(0);
        }
        prev = a(k, k);
    }
    Rat d = a(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Rank via Bareiss elimination with column skipping.
inline std::size_t rank(Matrix<Rat> a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Rat prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) a.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a(i, j) = (a(i, j) * a(r, col) - a(i, col) * a(r, j)) / prev;
            a(i, col) = Rat(0);
        }
        prev = a(r, col);
        ++r;
    }
    return r;
}

struct Rref {
    Matrix<Rat> mat;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form: unique canonical representative of the row space.
inline Rref rref(Matrix<Rat> a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Rref out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) a.swap_rows(p, r);
        const Rat inv = a(r, col).inverse();
        for (std::size_t j = col; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, col).is_zero()) continue;
            const Rat f = a(i, col);
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.mat = std::move(a);
    return out;
}

using Vec = std::vector<Rat>;

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec mat_vec(const Matrix<Rat>& m, const Vec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    Vec out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// Scale a nonzero rational vector to coprime integers with positive first
// nonzero entry; the canonical representative of its projective class.
inline Vec primitive(const Vec& v) {
    if (is_zero_vec(v)) throw std::domain_error("primitive: zero vector");
    Int l(1);
    for (const auto& c : v) l = lcm(l, c.den());
    Int g(0);
    std::vector<Int> num(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        num[i] = v[i].num() * (l / v[i].den());
        g = gcd(g, num[i]);
    }
    int lead = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(num[i]) != 0) {
            lead = sgn(num[i]);
            break;
        }
    if (lead < 0) g = -g;
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(Int(num[i] / g));
    return out;
}

// Coefficients expressing target in the span of the given vectors, if any.
// Free coefficients are set to zero, so the answer is unique when the
// spanning vectors are independent.
inline std::optional<Vec> solve_in_span(const std::vector<Vec>& span, const Vec& target) {
    const std::size_t k = span.size();
    if (k == 0) return is_zero_vec(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
    const std::size_t n = span.front().size();
    if (target.size() != n) throw std::invalid_argument("solve_in_span: dimension mismatch");
    Matrix<Rat> m(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (span[j].size() != n) throw std::invalid_argument("solve_in_span: dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = span[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) m(i, k) = target[i];
    const Rref r = rref(std::move(m));
    Vec x(k, Rat(0));
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
        if (r.pivots[row] == k) return std::nullopt;  // inconsistent
        x[r.pivots[row]] = r.mat(row, k);
    }
    return x;
}

// Basis of { v : m * v = 0 }, each vector in primitive form.
inline std::vector<Vec> null_space(const Matrix<Rat>& m) {
    const std::size_t n = m.cols();
    const Rref r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Rat(0));
        v[f] = Rat(1);
        for (std::size_t row = 0; row < r.pivots.size(); ++row) v[r.pivots[row]] = -r.mat(row, f);
        basis.push_back(primitive(v));
    }
    return basis;
}

inline std::string to_string(const Matrix<Rat>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace cubics
