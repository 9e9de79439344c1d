/**
 * @file identities.hpp
 * @brief Symbolic builders for the five core identity families.
 *
 * Each side is built from its own printed form; the left-side construction
 * never reuses the right-side construction, so agreement of the two values
 * is a genuine check.
 *
 * Family labels follow the source displays: (G1) and (G2) are univariate in
 * rho, (Ex1) is a rational function in beta with an integer order parameter
 * m (negative m allowed), (Ex2) and (Ex3) are bivariate in rho and beta and
 * share one closed-form side.
 */
#ifndef IDFORGE_IDENTITIES_HPP
#define IDFORGE_IDENTITIES_HPP

#include <utility>
#include <vector>

#include "idforge/combinatorics.hpp"
#include "idforge/multipoly.hpp"
#include "idforge/orthopoly.hpp"
#include "idforge/ratfn.hpp"

namespace idforge {

namespace detail {
/// powers[i] = base^i for i in [0, max_exp].
inline std::vector<MultiPoly> power_ladder(const MultiPoly& base, long long max_exp) {
    std::vector<MultiPoly> p;
    p.reserve(static_cast<std::size_t>(max_exp) + 1);
    p.push_back(MultiPoly::constant(Rational(1)));
    for (long long i = 1; i <= max_exp; ++i) p.push_back(p.back() * base);
    return p;
}
}  // namespace detail

// ---- (G1):  (2k)!/k! (1+rho)^k  =
//             sum_j binom(2k,2j) (1+rho)^(2k-2j) (1-rho^2)^j (2j-1)!!(2k-2j-1)!!

inline MultiPoly g1_lhs(long long k) {
    if (k < 0) throw std::invalid_argument("g1_lhs: negative k");
    const MultiPoly one_plus = MultiPoly::constant(Rational(1)) + MultiPoly::variable(Var::rho);
    return Rational(factorial(2 * k), factorial(k)) * one_plus.pow(k);
}

inline MultiPoly g1_rhs(long long k) {
    if (k < 0) throw std::invalid_argument("g1_rhs: negative k");
    const MultiPoly one_plus = MultiPoly::constant(Rational(1)) + MultiPoly::variable(Var::rho);
    const MultiPoly one_minus_sq =
        MultiPoly::constant(Rational(1)) -
        MultiPoly::variable(Var::rho) * MultiPoly::variable(Var::rho);
    auto pow_plus = detail::power_ladder(one_plus, 2 * k);
    auto pow_msq = detail::power_ladder(one_minus_sq, k);
    MultiPoly rhs;
    for (long long j = 0; j <= k; ++j) {
        Rational c(binomial(2 * k, 2 * j) * double_factorial(2 * j - 1) *
                   double_factorial(2 * k - 2 * j - 1));
        rhs += c * pow_plus[2 * k - 2 * j] * pow_msq[j];
    }
    return rhs;
}

// ---- (G2):  (1+rho)^k  =  2^-k sum_{j=0}^{2k} sum_{m=0}^{floor(j/2)}
//                           (2rho)^(j-2m) binom(k,j-2m) binom(k-j+2m,m)

inline MultiPoly g2_lhs(long long k) {
    if (k < 0) throw std::invalid_argument("g2_lhs: negative k");
    const MultiPoly one_plus = MultiPoly::constant(Rational(1)) + MultiPoly::variable(Var::rho);
    return one_plus.pow(k);
}

inline MultiPoly g2_rhs(long long k) {
    if (k < 0) throw std::invalid_argument("g2_rhs: negative k");
    const Rational half_pow = Rational(1, 2).pow(k);
    MultiPoly rhs;
    for (long long j = 0; j <= 2 * k; ++j) {
        for (long long m = 0; 2 * m <= j; ++m) {
            long long p = j - 2 * m;
            BigInt c = binomial(k, p) * binomial(k - j + 2 * m, m);
            if (c == 0) continue;
            rhs.add_term(Monomial::of(Var::rho, static_cast<std::uint32_t>(p)),
                         Rational(c) * Rational(2).pow(p) * half_pow);
        }
    }
    return rhs;
}

// ---- (Ex1):  sum_j (-1)^j binom(n,j) (beta)^(j+m)/(beta)^(j)  =
//              (-1)^n n! binom(m,n) (beta)^(m)/(beta)^(n),  any integer m.
// Both sides are polynomials for m >= 0 (the ratio collapses to
// (beta+j)^(m)) and proper rational functions for m < 0.

inline RationalFn ex1_lhs(long long n, long long m) {
    if (n < 0) throw std::invalid_argument("ex1_lhs: negative n");
    if (m >= 0) {
        MultiPoly acc;
        for (long long j = 0; j <= n; ++j) {
            Rational c(BigInt((j % 2) ? -1 : 1) * binomial(n, j));
            acc += c * poch_mpoly(Var::beta, j, m);
        }
        return RationalFn(acc);
    }
    RationalFn acc;
    for (long long j = 0; j <= n; ++j) {
        Rational c(BigInt((j % 2) ? -1 : 1) * binomial(n, j));
        acc += (poch_ratfn(Var::beta, j + m) / poch_ratfn(Var::beta, j)) * c;
    }
    return acc;
}

inline RationalFn ex1_rhs(long long n, long long m) {
    if (n < 0) throw std::invalid_argument("ex1_rhs: negative n");
    Rational scale(BigInt((n % 2) ? -1 : 1) * factorial(n) * binomial(m, n));
    return (poch_ratfn(Var::beta, m) / poch_ratfn(Var::beta, n)) * scale;
}

/// Closed-form side shared by (Ex2) and (Ex3), and the closed difference
/// moment: 0 for odd n, n!/(n/2)! (beta)^(n/2) (1-rho)^(n/2) for even n.
/// The Gaussian variant drops the beta factor.
inline MultiPoly closed_diff_moment_poly(Weight w, long long n) {
    if (n < 0) throw std::invalid_argument("closed_diff_moment_poly: negative n");
    if (n % 2 != 0) return MultiPoly::zero();
    long long h = n / 2;
    const MultiPoly one_minus_rho =
        MultiPoly::constant(Rational(1)) - MultiPoly::variable(Var::rho);
    MultiPoly p = Rational(factorial(n), factorial(h)) * one_minus_rho.pow(h);
    if (w == Weight::gamma) p = p * poch_mpoly(Var::beta, 0, h);
    return p;
}

// ---- (Ex2) left side:
//   sum_m (-1)^m binom(n,m) (beta)^(m) (beta)^(n-m)
//     sum_k binom(m,k) binom(n-m,k) rho^k k! / (beta)^(k)
// with the ratio (beta)^(m)/(beta)^(k) expanded as (beta+k)^(m-k).

inline MultiPoly ex2_lhs(long long n) {
    if (n < 0) throw std::invalid_argument("ex2_lhs: negative n");
    MultiPoly lhs;
    for (long long m = 0; m <= n; ++m) {
        MultiPoly inner;
        for (long long k = 0; k <= m; ++k) {
            BigInt c = binomial(m, k) * binomial(n - m, k) * factorial(k);
            if (c == 0) continue;
            inner += Rational(c) * poch_mpoly(Var::beta, k, m - k) *
                     MultiPoly::variable(Var::rho).pow(k);
        }
        Rational outer(BigInt((m % 2) ? -1 : 1) * binomial(n, m));
        lhs += outer * poch_mpoly(Var::beta, 0, n - m) * inner;
    }
    return lhs;
}

// ---- (Ex3) left side:
//   sum_m (-1)^(n-m) binom(n,m)
//     sum_j binom(m,j) (1-rho)^j rho^(m-j) (beta)^(n-j) (beta+m-j)^(j)

inline MultiPoly ex3_lhs(long long n) {
    if (n < 0) throw std::invalid_argument("ex3_lhs: negative n");
    const MultiPoly one_minus_rho =
        MultiPoly::constant(Rational(1)) - MultiPoly::variable(Var::rho);
    auto pow_1mr = detail::power_ladder(one_minus_rho, n);
    MultiPoly lhs;
    for (long long m = 0; m <= n; ++m) {
        MultiPoly inner;
        for (long long j = 0; j <= m; ++j) {
            inner += Rational(binomial(m, j)) * pow_1mr[j] *
                     MultiPoly::variable(Var::rho).pow(m - j) *
                     poch_mpoly(Var::beta, 0, n - j) * poch_mpoly(Var::beta, m - j, j);
        }
        Rational outer(BigInt(((n - m) % 2) ? -1 : 1) * binomial(n, m));
        lhs += outer * inner;
    }
    return lhs;
}

// Convenience pair builders.
inline std::pair<MultiPoly, MultiPoly> build_g1(long long k) { return {g1_lhs(k), g1_rhs(k)}; }
inline std::pair<MultiPoly, MultiPoly> build_g2(long long k) { return {g2_lhs(k), g2_rhs(k)}; }
inline std::pair<RationalFn, RationalFn> build_ex1(long long n, long long m) {
    return {ex1_lhs(n, m), ex1_rhs(n, m)};
}
inline std::pair<MultiPoly, MultiPoly> build_ex2(long long n) {
    return {ex2_lhs(n), closed_diff_moment_poly(Weight::gamma, n)};
}
inline std::pair<MultiPoly, MultiPoly> build_ex3(long long n) {
    return {ex3_lhs(n), closed_diff_moment_poly(Weight::gamma, n)};
}

}  // namespace idforge

#endif
