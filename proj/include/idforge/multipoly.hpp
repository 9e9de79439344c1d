/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over Rational in the fixed
 *        indeterminate set {rho, beta, alpha, x, y}.
 *
 * The term map is keyed by exponent vector, zero coefficients are never
 * stored, so the representation is canonical: two MultiPoly values compare
 * equal iff they are the same mathematical polynomial. All operations are
 * exact; values are immutable in spirit (every operation returns a fresh
 * polynomial) and safe to share across threads.
 */
#ifndef IDFORGE_MULTIPOLY_HPP
#define IDFORGE_MULTIPOLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "idforge/combinatorics.hpp"
#include "idforge/quadext.hpp"
#include "idforge/rational.hpp"

namespace idforge {

enum class Var : int { rho = 0, beta = 1, alpha = 2, x = 3, y = 4 };

inline constexpr int kVarCount = 5;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::rho, Var::beta, Var::alpha, Var::x,
                                                     Var::y};

inline const char* var_name(Var v) {
    switch (v) {
        case Var::rho: return "rho";
        case Var::beta: return "beta";
        case Var::alpha: return "alpha";
        case Var::x: return "x";
        case Var::y: return "y";
    }
    return "?";
}

inline std::optional<Var> var_from_name(std::string_view name) {
    for (Var v : kAllVars)
        if (name == var_name(v)) return v;
    return std::nullopt;
}

struct Monomial {
    std::array<std::uint32_t, kVarCount> exp{};

    std::uint32_t operator[](Var v) const { return exp[static_cast<int>(v)]; }
    std::uint32_t& operator[](Var v) { return exp[static_cast<int>(v)]; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_constant() const { return total_degree() == 0; }

    static Monomial of(Var v, std::uint32_t e = 1) {
        Monomial m;
        m[v] = e;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kVarCount; ++i) m.exp[i] = a.exp[i] + b.exp[i];
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        std::string s;
        for (Var v : kAllVars) {
            auto e = (*this)[v];
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += var_name(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        p.add_term(Monomial{}, c);
        return p;
    }
    static MultiPoly variable(Var v) {
        MultiPoly p;
        p.add_term(Monomial::of(v), Rational(1));
        return p;
    }
    static MultiPoly monomial(const Monomial& m, const Rational& c) {
        MultiPoly p;
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("MultiPoly: not a constant");
        return terms_.begin()->second;
    }

    std::uint32_t degree(Var v) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    bool uses(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m[v] > 0) return true;
        return false;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
        MultiPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c) { return *this = *this * c; }

    MultiPoly pow(unsigned long long e) const {
        MultiPoly acc = constant(Rational(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Coefficient of v^deg, as a polynomial in the remaining variables.
    MultiPoly coefficient_of(Var v, std::uint32_t deg) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            if (m[v] != deg) continue;
            Monomial stripped = m;
            stripped[v] = 0;
            r.add_term(stripped, c);
        }
        return r;
    }

    /// Exact evaluation. The assignment must cover every variable present.
    template <typename T>
    T eval(const std::map<Var, T>& assignment) const;

    /// Substitutes a polynomial for a variable (Horner in that variable).
    MultiPoly substitute(Var v, const MultiPoly& rep) const {
        if (!uses(v)) return *this;
        std::map<std::uint32_t, MultiPoly> layers;
        for (const auto& [m, c] : terms_) {
            Monomial stripped = m;
            stripped[v] = 0;
            layers[m[v]].add_term(stripped, c);
        }
        MultiPoly acc;
        std::uint32_t prev = 0;
        bool first = true;
        for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
            if (first) {
                acc = it->second;
                first = false;
            } else {
                for (std::uint32_t i = it->first; i < prev; ++i) acc = acc * rep;
                acc += it->second;
            }
            prev = it->first;
        }
        for (std::uint32_t i = 0; i < prev; ++i) acc = acc * rep;
        return acc;
    }

    MultiPoly substitute(Var v, const Rational& value) const {
        return substitute(v, MultiPoly::constant(value));
    }

    /// First monomial (in canonical order) whose coefficients differ,
    /// with both coefficients; nullopt when equal.
    static std::optional<std::tuple<Monomial, Rational, Rational>> first_difference(
        const MultiPoly& a, const MultiPoly& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                return std::tuple(ia->first, ia->second, Rational(0));
            }
            if (ia == a.terms_.end() || ib->first < ia->first) {
                return std::tuple(ib->first, Rational(0), ib->second);
            }
            if (ia->second != ib->second) return std::tuple(ia->first, ia->second, ib->second);
            ++ia, ++ib;
        }
        return std::nullopt;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            Rational mag = c.abs();
            if (s.empty()) {
                if (c.is_negative()) s += "-";
            } else {
                s += c.is_negative() ? " - " : " + ";
            }
            if (m.is_constant()) {
                s += mag.to_string();
            } else {
                if (mag != Rational(1)) s += mag.to_string() + "*";
                s += m.to_string();
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        return os << p.to_string();
    }

private:
    TermMap terms_;
};

namespace detail {

template <typename T>
T value_pow(const T& base, std::uint64_t e, const T& one) {
    T acc = one, b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

inline Rational lift_coeff(const Rational& c, const Rational&) { return c; }
inline QuadExtNum lift_coeff(const Rational& c, const QuadExtNum& proto) {
    return QuadExtNum(c, proto.d());
}

}  // namespace detail

template <typename T>
T MultiPoly::eval(const std::map<Var, T>& assignment) const {
    for (Var v : kAllVars) {
        if (uses(v) && assignment.find(v) == assignment.end())
            throw std::invalid_argument(std::string("MultiPoly::eval: missing variable ") +
                                        var_name(v));
    }
    if constexpr (std::is_same_v<T, QuadExtNum>) {
        long long d = 0;
        for (const auto& [v, val] : assignment) {
            if (d == 0) d = val.d();
            else if (val.d() != d)
                throw std::invalid_argument("MultiPoly::eval: mixed quadratic fields");
        }
    }
    if (assignment.empty()) {
        // Only constants reach this point (the missing-variable check above
        // fires otherwise), and only Rational can be built out of thin air.
        if constexpr (std::is_same_v<T, Rational>) return constant_value();
        throw std::invalid_argument("MultiPoly::eval: empty assignment");
    }
    const T proto = assignment.begin()->second;
    const T one = detail::one_like(proto);
    T sum = one - one;
    for (const auto& [m, c] : terms_) {
        T term = detail::lift_coeff(c, proto);
        for (Var v : kAllVars) {
            auto e = m[v];
            if (e == 0) continue;
            term = term * detail::value_pow(assignment.at(v), e, one);
        }
        sum = sum + term;
    }
    return sum;
}

/// (v + offset)^(n) for n >= 0, expanded as a polynomial.
inline MultiPoly poch_mpoly(Var v, long long offset, long long n) {
    if (n < 0) throw std::invalid_argument("poch_mpoly: negative order");
    MultiPoly acc = MultiPoly::constant(Rational(1));
    for (long long i = 0; i < n; ++i) {
        acc = acc * (MultiPoly::variable(v) + MultiPoly::constant(Rational(offset + i)));
    }
    return acc;
}

}  // namespace idforge

#endif
