/**
 * @file ratfn.hpp
 * @brief Quotients of multivariate polynomials.
 *
 * No GCD normalization is performed; equality is decided by
 * cross-multiplication, which is exact and keeps the arithmetic simple.
 */
#ifndef IDFORGE_RATFN_HPP
#define IDFORGE_RATFN_HPP

#include <stdexcept>
#include <string>

#include "idforge/multipoly.hpp"

namespace idforge {

class RationalFn {
public:
    RationalFn() : num_(MultiPoly::zero()), den_(MultiPoly::constant(Rational(1))) {}

    RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    }

    RationalFn(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(Rational(1))) {}
    RationalFn(const Rational& c) : RationalFn(MultiPoly::constant(c)) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend RationalFn operator-(const RationalFn& r) { return RationalFn(-r.num_, r.den_); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFn operator*(const RationalFn& a, const Rational& c) {
        return RationalFn(a.num_ * c, a.den_);
    }

    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    /// Mathematical equality via cross-multiplication.
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    template <typename T>
    T eval(const std::map<Var, T>& assignment) const {
        T d = den_.eval(assignment);
        if (detail::value_is_zero(d)) throw std::domain_error("RationalFn::eval: pole");
        return num_.eval(assignment) / d;
    }

    std::string to_string() const {
        if (den_ == MultiPoly::constant(Rational(1))) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFn& r) {
        return os << r.to_string();
    }

private:
    MultiPoly num_, den_;
};

/// Symbolic (v)^(n) for any integer n: a polynomial when n >= 0,
/// 1/((v-1)...(v+n)) when n < 0.
inline RationalFn poch_ratfn(Var v, long long n) {
    if (n >= 0) return RationalFn(poch_mpoly(v, 0, n));
    MultiPoly den = MultiPoly::constant(Rational(1));
    for (long long i = 1; i <= -n; ++i)
        den = den * (MultiPoly::variable(v) - MultiPoly::constant(Rational(i)));
    return RationalFn(MultiPoly::constant(Rational(1)), den);
}

/// Symbolic (v + offset)^(n) for any integer n.
inline RationalFn poch_ratfn_shifted(Var v, long long offset, long long n) {
    if (n >= 0) return RationalFn(poch_mpoly(v, offset, n));
    MultiPoly den = MultiPoly::constant(Rational(1));
    for (long long i = 1; i <= -n; ++i)
        den = den * (MultiPoly::variable(v) + MultiPoly::constant(Rational(offset - i)));
    return RationalFn(MultiPoly::constant(Rational(1)), den);
}

}  // namespace idforge

#endif
