#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "idforge/multipoly.hpp"
#include "idforge/ratfn.hpp"

using namespace idforge;

namespace {

const MultiPoly kOne = MultiPoly::constant(Rational(1));

MultiPoly rho() { return MultiPoly::variable(Var::rho); }
MultiPoly beta() { return MultiPoly::variable(Var::beta); }

/// Random sparse polynomial: at most max_terms terms, per-variable degree
/// at most max_deg, small rational coefficients.
MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int max_deg = 8) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    MultiPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m;
        m[Var::rho] = deg(rng) % 3 ? 0 : deg(rng);
        m[Var::beta] = deg(rng) % 3 ? 0 : deg(rng);
        m[Var::x] = deg(rng) % 4 ? 0 : deg(rng);
        p.add_term(m, Rational(num(rng), den(rng)));
    }
    return p;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-12, 12), den(1, 7);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("basic ring identities") {
    CHECK((kOne + rho()) * (kOne - rho()) == kOne - rho() * rho());
    CHECK((kOne + rho()).pow(0) == kOne);
    MultiPoly sq = kOne + Rational(2) * rho() + rho() * rho();
    CHECK((kOne + rho()).pow(2) == sq);
}

TEST_CASE("pow agrees with repeated multiplication") {
    MultiPoly base = kOne + rho();
    MultiPoly by_mul = kOne;
    for (int i = 0; i < 7; ++i) by_mul = by_mul * base;
    CHECK(base.pow(7) == by_mul);
}

TEST_CASE("canonical form stores no zero coefficients") {
    MultiPoly p = rho() - rho();
    CHECK(p.is_zero());
    CHECK(p.num_terms() == 0);
    MultiPoly q = (kOne + rho()) - rho();
    CHECK(q == kOne);
    CHECK(q.num_terms() == 1);
}

TEST_CASE("symbolic Pochhammer polynomials") {
    CHECK(poch_mpoly(Var::beta, 0, 0) == kOne);
    CHECK(poch_mpoly(Var::beta, 0, 2) == beta() * beta() + beta());
    CHECK(poch_ratfn(Var::beta, 0) == RationalFn(kOne));
    // (beta)^(-1) = 1/(beta - 1)
    RationalFn neg = poch_ratfn(Var::beta, -1);
    CHECK(neg == RationalFn(kOne, beta() - kOne));
    // shifted: (beta + 2)^(2) = (beta+2)(beta+3)
    CHECK(poch_mpoly(Var::beta, 2, 2) ==
          (beta() + MultiPoly::constant(Rational(2))) * (beta() + MultiPoly::constant(Rational(3))));
}

TEST_CASE("point evaluation") {
    MultiPoly p = kOne - rho() * rho();
    CHECK(p.eval<Rational>({{Var::rho, Rational(2, 3)}}) == Rational(5, 9));

    std::map<Var, QuadExtNum> at_i{{Var::rho, QuadExtNum::root(-1)}};
    CHECK(p.eval<QuadExtNum>(at_i) == QuadExtNum(Rational(2), -1));

    MultiPoly mixed = rho() * beta() + MultiPoly::constant(Rational(7));
    CHECK(mixed.eval<Rational>({{Var::rho, Rational(0)}, {Var::beta, Rational(0)}}) ==
          Rational(7));
    CHECK(MultiPoly::constant(Rational(5)).eval<Rational>({}) == Rational(5));
}

TEST_CASE("evaluation errors") {
    MultiPoly p = rho() * beta();
    CHECK_THROWS_AS(p.eval<Rational>({{Var::rho, Rational(1)}}), std::invalid_argument);
    std::map<Var, QuadExtNum> mixed{{Var::rho, QuadExtNum::root(-1)},
                                    {Var::beta, QuadExtNum::root(5)}};
    CHECK_THROWS_AS(p.eval<QuadExtNum>(mixed), std::invalid_argument);
}

TEST_CASE("coefficient extraction") {
    MultiPoly p = kOne + Rational(2) * rho() + rho() * rho() * beta();
    CHECK(p.coefficient_of(Var::rho, 2) == beta());
    CHECK(p.coefficient_of(Var::rho, 1) == MultiPoly::constant(Rational(2)));
    CHECK((kOne - rho()).pow(3).coefficient_of(Var::rho, 2) == MultiPoly::constant(Rational(3)));
    CHECK(MultiPoly::constant(Rational(5)).coefficient_of(Var::rho, 1).is_zero());
}

TEST_CASE("coefficient decomposition reconstructs the polynomial") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly p = random_poly(rng);
        MultiPoly rebuilt;
        for (std::uint32_t d = 0; d <= p.degree(Var::rho); ++d)
            rebuilt += p.coefficient_of(Var::rho, d) * rho().pow(d);
        CHECK(rebuilt == p);
    }
}

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937_64 rng(456);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation commutes with multiplication") {
    std::mt19937_64 rng(789);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        std::map<Var, Rational> sigma;
        for (Var v : kAllVars) sigma.emplace(v, random_rational(rng));
        CHECK((a * b).eval<Rational>(sigma) == a.eval<Rational>(sigma) * b.eval<Rational>(sigma));

        std::map<Var, QuadExtNum> tau;
        std::uniform_int_distribution<long long> coin(0, 5);
        for (Var v : kAllVars)
            tau.emplace(v, QuadExtNum(random_rational(rng), Rational(coin(rng), 3), 5));
        CHECK((a * b).eval<QuadExtNum>(tau) ==
              a.eval<QuadExtNum>(tau) * b.eval<QuadExtNum>(tau));
    }
}

TEST_CASE("substitution") {
    // (beta)^(3) with beta -> beta + 1 gives (beta+1)^(3)
    MultiPoly shifted = poch_mpoly(Var::beta, 0, 3).substitute(
        Var::beta, beta() + MultiPoly::constant(Rational(1)));
    CHECK(shifted == poch_mpoly(Var::beta, 1, 3));

    // x -> x + y on x^2 gives x^2 + 2xy + y^2
    MultiPoly x = MultiPoly::variable(Var::x), y = MultiPoly::variable(Var::y);
    CHECK((x * x).substitute(Var::x, x + y) == x * x + Rational(2) * x * y + y * y);

    // numeric substitution
    CHECK((kOne - rho() * rho()).substitute(Var::rho, Rational(2, 3)) ==
          MultiPoly::constant(Rational(5, 9)));
}

TEST_CASE("first difference witnesses") {
    MultiPoly p = kOne + rho();
    MultiPoly q = kOne + Rational(2) * rho();
    auto diff = MultiPoly::first_difference(p, q);
    REQUIRE(diff.has_value());
    auto& [mono, ca, cb] = *diff;
    CHECK(mono == Monomial::of(Var::rho));
    CHECK(ca == Rational(1));
    CHECK(cb == Rational(2));
    CHECK_FALSE(MultiPoly::first_difference(p, p).has_value());

    auto missing = MultiPoly::first_difference(kOne, kOne + rho());
    REQUIRE(missing.has_value());
    CHECK(std::get<2>(*missing) == Rational(1));
}

TEST_CASE("rational function equality by cross-multiplication") {
    RationalFn quotient(beta(), beta());  // beta/beta
    CHECK(quotient == RationalFn(kOne));
    CHECK(RationalFn(beta() * beta() - kOne, beta() - kOne) == RationalFn(beta() + kOne));
    CHECK_FALSE(RationalFn(beta(), kOne) == RationalFn(kOne, beta()));
    CHECK_THROWS_AS(RationalFn(kOne, MultiPoly::zero()), std::domain_error);
}

TEST_CASE("rational function arithmetic") {
    RationalFn a(kOne, beta());                       // 1/beta
    RationalFn b(kOne, beta() - kOne);                // 1/(beta-1)
    CHECK(b - a == RationalFn(kOne, beta() * beta() - beta()));
    CHECK(a * b == RationalFn(kOne, beta() * (beta() - kOne)));
    CHECK(a / b == RationalFn(beta() - kOne, beta()));
    CHECK_THROWS_AS(a / RationalFn(MultiPoly::zero()), std::domain_error);

    std::map<Var, Rational> sigma{{Var::beta, Rational(3)}};
    CHECK(a.eval<Rational>(sigma) == Rational(1, 3));
    std::map<Var, Rational> pole{{Var::beta, Rational(1)}};
    CHECK_THROWS_AS(b.eval<Rational>(pole), std::domain_error);
}

TEST_CASE("rational function sums telescope") {
    // 1/(beta-1) - 1/beta = 1/(beta(beta-1)) checked by cross-multiplication
    RationalFn lhs = poch_ratfn(Var::beta, -1) - RationalFn(kOne, beta());
    CHECK(lhs == RationalFn(kOne, beta() * (beta() - kOne)));
}
