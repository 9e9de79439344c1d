/**
 * @file combinatorics.hpp
 * @brief Factorials, double factorials, generalized binomials and rising
 *        factorials over exact number types.
 *
 * Conventions: (-1)!! = 0!! = 1; binom(n,k) = 0 for 0 <= n < k and for
 * k < 0; binom supports negative upper arguments via the falling product.
 * The rising factorial (x)^(n) extends to negative n as
 * 1/((x-1)(x-2)...(x+n)), matching the gamma-ratio reading.
 */
#ifndef IDFORGE_COMBINATORICS_HPP
#define IDFORGE_COMBINATORICS_HPP

#include <stdexcept>

#include "idforge/quadext.hpp"
#include "idforge/rational.hpp"

namespace idforge {

inline BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= static_cast<long>(i);
    return r;
}

inline BigInt double_factorial(long long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    BigInt r = 1;  // (-1)!! = 0!! = 1
    for (long long i = n; i >= 2; i -= 2) r *= static_cast<long>(i);
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    BigInt num = 1;
    for (long long i = 0; i < k; ++i) num *= BigInt(static_cast<long>(n - i));
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return r;
}

namespace detail {
inline Rational one_like(const Rational&) { return Rational(1); }
inline QuadExtNum one_like(const QuadExtNum& v) { return QuadExtNum::one(v.d()); }
inline bool value_is_zero(const Rational& v) { return v.is_zero(); }
inline bool value_is_zero(const QuadExtNum& v) { return v.is_zero(); }

inline Rational neg_one_pow(long long e) {
    return (((e % 2) + 2) % 2) ? Rational(-1) : Rational(1);
}

inline BigInt int_pow(long long base, unsigned long long e) {
    BigInt b(static_cast<long>(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}
}  // namespace detail

/// (x)^(n) for Rational or QuadExtNum x and any integer n.
template <typename F>
F rising_factorial(const F& x, long long n) {
    const F one = detail::one_like(x);
    F acc = one;
    if (n >= 0) {
        F term = x;
        for (long long i = 0; i < n; ++i) {
            acc *= term;
            term += one;
        }
        return acc;
    }
    // (x)^(-k) = 1 / ((x-1)(x-2)...(x-k))
    F term = x;
    for (long long i = 0; i < -n; ++i) {
        term -= one;
        acc *= term;
    }
    if (detail::value_is_zero(acc))
        throw std::domain_error("rising_factorial: pole for negative n");
    return one / acc;
}

}  // namespace idforge

#endif
