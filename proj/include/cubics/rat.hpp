#pragma once

// Exact rational scalar. Thin value wrapper around GMP's mpq_class that
// keeps every value in canonical form: gcd(num, den) = 1, den > 0.
// All arithmetic is exact; division by zero throws std::domain_error.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubics {

using Int = mpz_class;

class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) { normalize_(); }
    Rat(const Int& num, const Int& den) : v_(num, den) { normalize_(); }

    static Rat parse(const std::string& s);

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rat r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // "n" for integers, "n/d" otherwise.
    std::string str() const { return v_.get_str(); }

  private:
    explicit Rat(const mpq_class& q) : v_(q) {}

    void normalize_() {
        if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    Rat r;
    r.v_ = q;
    return r;
}

inline std::string to_string(const Rat& r) { return r.str(); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Exact integer square root if n is a perfect square.
inline bool perfect_sqrt(const Int& n, Int& root) {
    if (sgn(n) < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

// Exact square root of a rational, when it exists in Q.
inline bool perfect_sqrt(const Rat& q, Rat& root) {
    Int rn, rd;
    if (!perfect_sqrt(q.num(), rn) || !perfect_sqrt(q.den(), rd)) return false;
    root = Rat(rn, rd);
    return true;
}

}  // namespace cubics
