/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational arithmetic.
 *
 * Rational is the coefficient field used by every other module. Values are
 * kept in lowest terms with a positive denominator; no operation ever
 * rounds. Backed by GMP.
 */
#ifndef IDFORGE_RATIONAL_HPP
#define IDFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace idforge {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(int v) : q_(v) {}
    Rational(const BigInt& v) : q_(v) {}

    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_negative() const { return q_ < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_), raw_tag{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_), raw_tag{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_), raw_tag{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_), raw_tag{});
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const {
        Rational r;
        r.q_ = ::abs(q_);
        return r;
    }

    Rational pow(long long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0 to a negative power");
            return inverse().pow(-e);
        }
        Rational base = *this, acc = 1;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Parses "n", "n/d" or a decimal literal like "-0.25" exactly.
    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
        std::string str(s);
        auto slash = str.find('/');
        if (slash != std::string::npos) {
            BigInt n(str.substr(0, slash)), d(str.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = str.find('.');
        if (dot == std::string::npos) return Rational(BigInt(str));
        std::string digits = str.substr(0, dot) + str.substr(dot + 1);
        size_t frac_len = str.size() - dot - 1;
        if (digits == "" || digits == "-" || digits == "+")
            throw std::invalid_argument("Rational::parse: bad literal '" + str + "'");
        BigInt den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
    mpq_class q_;  // mpq arithmetic keeps values canonical
};

}  // namespace idforge

#endif
