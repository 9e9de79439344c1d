/**
 * @file orthopoly.hpp
 * @brief Probabilists' Hermite and generalized Laguerre polynomials with a
 *        symbolic shape parameter, monomial-to-basis expansions, connection
 *        coefficients for the Gaussian and Gamma weights, and conditional
 *        moment polynomials.
 *
 * Connection coefficients carry a radical: 1/sqrt(n!) in the Gaussian case
 * and sqrt(n!/(beta)^(n)) in the Gamma case. Radicals are never
 * materialized; ConnectionCoeff stores the radical-free factor and every
 * exposed product (mixed_moment_term) is radical-free by construction, so
 * all arithmetic stays in Q(beta).
 *
 * The Laguerre normalization follows the expansion with leading x
 * coefficient (-1)^n/n!, which differs from some textbook conventions.
 */
#ifndef IDFORGE_ORTHOPOLY_HPP
#define IDFORGE_ORTHOPOLY_HPP

#include <utility>
#include <vector>

#include "idforge/combinatorics.hpp"
#include "idforge/multipoly.hpp"

namespace idforge {

enum class Weight { normal, gamma };

/// H_n via H_{n+1} = x H_n - n H_{n-1}, H_0 = 1, H_1 = x.
inline MultiPoly hermite(int n) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    MultiPoly prev = MultiPoly::zero();              // H_{-1}
    MultiPoly cur = MultiPoly::constant(Rational(1));  // H_0
    const MultiPoly x = MultiPoly::variable(Var::x);
    for (int i = 0; i < n; ++i) {
        MultiPoly next = x * cur - Rational(i) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// L_n(x|beta) = sum_k (-1)^k (beta+k)^(n-k) x^k / ((n-k)! k!),
/// a polynomial in x and beta.
inline MultiPoly laguerre(int n) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    MultiPoly acc;
    for (int k = 0; k <= n; ++k) {
        Rational c(BigInt((k % 2) ? -1 : 1), factorial(n - k) * factorial(k));
        acc += c * poch_mpoly(Var::beta, k, n - k) * MultiPoly::variable(Var::x).pow(k);
    }
    return acc;
}

/// x^j = sum over listed (i, c) of c * H_i(x); indices step down by 2.
inline std::vector<std::pair<int, Rational>> monomial_in_hermite(int j) {
    if (j < 0) throw std::invalid_argument("monomial_in_hermite: negative degree");
    std::vector<std::pair<int, Rational>> out;
    for (int m = 0; 2 * m <= j; ++m) {
        BigInt den = factorial(m) * factorial(j - 2 * m);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
        out.emplace_back(j - 2 * m, Rational(factorial(j), den));
    }
    return out;
}

/// x^j = sum over listed (k, c(beta)) of c(beta) * L_k(x|beta).
inline std::vector<std::pair<int, MultiPoly>> monomial_in_laguerre(int j) {
    if (j < 0) throw std::invalid_argument("monomial_in_laguerre: negative degree");
    std::vector<std::pair<int, MultiPoly>> out;
    for (int k = 0; k <= j; ++k) {
        Rational c(BigInt((k % 2) ? -1 : 1) * factorial(j), factorial(j - k));
        out.emplace_back(k, c * poch_mpoly(Var::beta, k, j - k));
    }
    return out;
}

/// Expansion coefficient of the degree-j monomial on the n-th orthonormal
/// basis element, with the radical factored out.
struct ConnectionCoeff {
    Weight weight;
    int j = 0;
    int n = 0;
    MultiPoly radical_free;  // zero polynomial when the coefficient vanishes

    bool is_zero() const { return radical_free.is_zero(); }
    Rational rational_value() const { return radical_free.constant_value(); }
};

/// Gaussian case: zero when n > j or j - n odd, else
/// j! / (2^((j-n)/2) ((j-n)/2)!), to be read against 1/sqrt(n!).
inline ConnectionCoeff connection_normal(int j, int n) {
    if (j < 0 || n < 0) throw std::invalid_argument("connection_normal: negative index");
    ConnectionCoeff cc{Weight::normal, j, n, MultiPoly::zero()};
    if (n > j || (j - n) % 2 != 0) return cc;
    int h = (j - n) / 2;
    BigInt den = factorial(h);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(h));
    cc.radical_free = MultiPoly::constant(Rational(factorial(j), den));
    return cc;
}

/// Gamma case: zero when n > j, else (-1)^n binom(j,n) (beta)^(j), to be
/// read against sqrt(n!/(beta)^(n)).
inline ConnectionCoeff connection_gamma(int j, int n) {
    if (j < 0 || n < 0) throw std::invalid_argument("connection_gamma: negative index");
    ConnectionCoeff cc{Weight::gamma, j, n, MultiPoly::zero()};
    if (n > j) return cc;
    Rational sign(BigInt((n % 2) ? -1 : 1) * binomial(j, n));
    cc.radical_free = sign * poch_mpoly(Var::beta, 0, j);
    return cc;
}

/// The radical-free product H_{m,j} H_{l,j} appearing in the mixed-moment
/// expansion. Normal: c_{m,j} c_{l,j} / j!. Gamma:
/// binom(m,j) binom(l,j) j! (beta+j)^(m-j) (beta)^(l).
inline MultiPoly mixed_moment_term(Weight w, int m, int l, int j) {
    if (m < 0 || l < 0 || j < 0) throw std::invalid_argument("mixed_moment_term: negative index");
    if (j > m || j > l) return MultiPoly::zero();
    if (w == Weight::normal) {
        ConnectionCoeff a = connection_normal(m, j), b = connection_normal(l, j);
        if (a.is_zero() || b.is_zero()) return MultiPoly::zero();
        return MultiPoly::constant(a.rational_value() * b.rational_value() /
                                   Rational(factorial(j)));
    }
    Rational c(binomial(m, j) * binomial(l, j) * factorial(j));
    return c * poch_mpoly(Var::beta, j, m - j) * poch_mpoly(Var::beta, 0, l);
}

/// E X^m Y^l = sum_j rho^j H_{m,j} H_{l,j} as a polynomial in rho (Normal)
/// or in rho and beta (Gamma).
inline MultiPoly mixed_moment_poly(Weight w, int m, int l) {
    MultiPoly acc;
    for (int j = 0; j <= std::min(m, l); ++j) {
        acc += MultiPoly::variable(Var::rho).pow(j) * mixed_moment_term(w, m, l, j);
    }
    return acc;
}

/// Conditional moment eta_j(y|beta,rho) =
/// sum_m binom(j,m) (beta+m)^(j-m) (rho y)^m (1-rho)^(j-m).
inline MultiPoly eta_conditional(int j) {
    if (j < 0) throw std::invalid_argument("eta_conditional: negative index");
    const MultiPoly rho_y = MultiPoly::variable(Var::rho) * MultiPoly::variable(Var::y);
    const MultiPoly one_minus_rho =
        MultiPoly::constant(Rational(1)) - MultiPoly::variable(Var::rho);
    MultiPoly acc;
    for (int m = 0; m <= j; ++m) {
        acc += Rational(binomial(j, m)) * poch_mpoly(Var::beta, m, j - m) * rho_y.pow(m) *
               one_minus_rho.pow(j - m);
    }
    return acc;
}

/// Checks the argument-shift recurrence
///   L_n(y|beta) = sum_{j<=max_j} L_{n-j}(x|beta+j) (x-y)^j / j!
/// exactly as a polynomial in (x, y, beta). The (x-y)^j factor is the
/// orientation consistent with d/dx L_n(x|beta) = -L_{n-1}(x|beta+1).
/// max_j < n truncates the sum (and the identity then fails for n >= 1).
inline bool laguerre_shift_check(int n, int max_j = -1) {
    if (n < 0) throw std::invalid_argument("laguerre_shift_check: negative degree");
    if (max_j < 0) max_j = n;
    MultiPoly lhs = laguerre(n).substitute(Var::x, MultiPoly::variable(Var::y));
    const MultiPoly x_minus_y = MultiPoly::variable(Var::x) - MultiPoly::variable(Var::y);
    const MultiPoly beta_shifted_base = MultiPoly::variable(Var::beta);
    MultiPoly rhs;
    for (int j = 0; j <= std::min(n, max_j); ++j) {
        MultiPoly lag = laguerre(n - j).substitute(
            Var::beta, beta_shifted_base + MultiPoly::constant(Rational(j)));
        rhs += lag * x_minus_y.pow(j) * Rational(BigInt(1), factorial(j));
    }
    return lhs == rhs;
}

}  // namespace idforge

#endif
