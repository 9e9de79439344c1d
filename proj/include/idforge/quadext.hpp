/**
 * @file quadext.hpp
 * @brief Elements a + b*sqrt(d) of a quadratic extension of the rationals.
 *
 * d is fixed per value and must be a nonzero non-square integer, so the
 * extension is a field. d = -1 gives the Gaussian rationals, d = 5 the
 * field containing the golden ratio.
 */
#ifndef IDFORGE_QUADEXT_HPP
#define IDFORGE_QUADEXT_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "idforge/rational.hpp"

namespace idforge {

class QuadExtNum {
public:
    QuadExtNum(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        check_d(d);
    }
    /// Embeds a rational into Q(sqrt(d)).
    QuadExtNum(Rational a, long long d) : QuadExtNum(std::move(a), Rational(0), d) {}

    static QuadExtNum zero(long long d) { return QuadExtNum(Rational(0), Rational(0), d); }
    static QuadExtNum one(long long d) { return QuadExtNum(Rational(1), Rational(0), d); }
    /// sqrt(d) itself.
    static QuadExtNum root(long long d) { return QuadExtNum(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExtNum conjugate() const { return QuadExtNum(a_, -b_, d_); }

    /// a^2 - d*b^2; multiplicative, zero only for the zero element.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    friend QuadExtNum operator-(const QuadExtNum& v) { return QuadExtNum(-v.a_, -v.b_, v.d_); }

    friend QuadExtNum operator+(const QuadExtNum& u, const QuadExtNum& v) {
        require_same_d(u, v);
        return QuadExtNum(u.a_ + v.a_, u.b_ + v.b_, u.d_);
    }
    friend QuadExtNum operator-(const QuadExtNum& u, const QuadExtNum& v) {
        require_same_d(u, v);
        return QuadExtNum(u.a_ - v.a_, u.b_ - v.b_, u.d_);
    }
    friend QuadExtNum operator*(const QuadExtNum& u, const QuadExtNum& v) {
        require_same_d(u, v);
        return QuadExtNum(u.a_ * v.a_ + Rational(u.d_) * u.b_ * v.b_,
                          u.a_ * v.b_ + u.b_ * v.a_, u.d_);
    }
    friend QuadExtNum operator*(const QuadExtNum& u, const Rational& c) {
        return QuadExtNum(u.a_ * c, u.b_ * c, u.d_);
    }
    friend QuadExtNum operator*(const Rational& c, const QuadExtNum& u) { return u * c; }

    QuadExtNum inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("QuadExtNum: inverse of zero");
        return QuadExtNum(a_ / n, -b_ / n, d_);
    }

    friend QuadExtNum operator/(const QuadExtNum& u, const QuadExtNum& v) {
        require_same_d(u, v);
        return u * v.inverse();
    }

    QuadExtNum pow(unsigned long long e) const {
        QuadExtNum base = *this, acc = one(d_);
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    QuadExtNum& operator+=(const QuadExtNum& o) { *this = *this + o; return *this; }
    QuadExtNum& operator-=(const QuadExtNum& o) { *this = *this - o; return *this; }
    QuadExtNum& operator*=(const QuadExtNum& o) { *this = *this * o; return *this; }

    friend bool operator==(const QuadExtNum& u, const QuadExtNum& v) {
        return u.d_ == v.d_ && u.a_ == v.a_ && u.b_ == v.b_;
    }
    friend bool operator!=(const QuadExtNum& u, const QuadExtNum& v) { return !(u == v); }

    std::string to_string() const {
        std::string root = (d_ == -1) ? "i" : "sqrt(" + std::to_string(d_) + ")";
        if (b_.is_zero()) return a_.to_string();
        std::string s;
        if (!a_.is_zero()) s = a_.to_string() + (b_.is_negative() ? " - " : " + ");
        else if (b_.is_negative()) s = "-";
        Rational mag = b_.abs();
        if (mag != Rational(1)) s += mag.to_string() + "*";
        return s + root;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExtNum& v) {
        return os << v.to_string();
    }

private:
    static void check_d(long long d) {
        if (d == 0) throw std::invalid_argument("QuadExtNum: d must be nonzero");
        if (d > 0) {
            long long r = static_cast<long long>(std::sqrt(static_cast<double>(d)));
            for (long long s = r - 2; s <= r + 2; ++s)
                if (s >= 0 && s * s == d)
                    throw std::invalid_argument("QuadExtNum: d must not be a perfect square");
        }
    }
    static void require_same_d(const QuadExtNum& u, const QuadExtNum& v) {
        if (u.d_ != v.d_)
            throw std::invalid_argument("QuadExtNum: mixed extension fields (d mismatch)");
    }

    Rational a_, b_;
    long long d_;
};

}  // namespace idforge

#endif
