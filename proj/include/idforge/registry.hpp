/**
 * @file registry.hpp
 * @brief The identity registry and the exact verification engine.
 *
 * Every identity instance is checked by constructing both sides
 * independently from their printed forms and comparing canonical values in
 * the declared ring. A failed comparison always carries a witness: the
 * first differing monomial or the differing value pair.
 *
 * verify_grid distributes cells over a thread pool; results are written to
 * pre-assigned slots, so output order is deterministic and independent of
 * scheduling.
 */
#ifndef IDFORGE_REGISTRY_HPP
#define IDFORGE_REGISTRY_HPP

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "idforge/fiblucas.hpp"
#include "idforge/identities.hpp"

namespace idforge {

using Value = std::variant<Rational, QuadExtNum, MultiPoly, RationalFn>;
using Params = std::map<std::string, long long>;

inline std::string value_to_string(const Value& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

inline bool values_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x == std::get<T>(b);
        },
        a);
}

/// Human-readable description of the first difference between two values;
/// nullopt when they are equal.
inline std::optional<std::string> value_witness(const Value& lhs, const Value& rhs) {
    if (lhs.index() != rhs.index()) return "ring mismatch between sides";
    if (std::holds_alternative<MultiPoly>(lhs)) {
        auto diff = MultiPoly::first_difference(std::get<MultiPoly>(lhs), std::get<MultiPoly>(rhs));
        if (!diff) return std::nullopt;
        auto& [mono, ca, cb] = *diff;
        return "monomial " + mono.to_string() + ": lhs coeff " + ca.to_string() +
               ", rhs coeff " + cb.to_string();
    }
    if (std::holds_alternative<RationalFn>(lhs)) {
        const auto& a = std::get<RationalFn>(lhs);
        const auto& b = std::get<RationalFn>(rhs);
        auto diff = MultiPoly::first_difference(a.num() * b.den(), b.num() * a.den());
        if (!diff) return std::nullopt;
        auto& [mono, ca, cb] = *diff;
        return "cross-multiplied monomial " + mono.to_string() + ": lhs " + ca.to_string() +
               ", rhs " + cb.to_string();
    }
    if (values_equal(lhs, rhs)) return std::nullopt;
    return "lhs = " + value_to_string(lhs) + ", rhs = " + value_to_string(rhs);
}

struct ParamRange {
    std::string name;
    long long lo = 0, hi = 0;            // default grid range
    long long hard_lo = 0, hard_hi = 0;  // guard rails for CLI overrides
};

struct IdentityDescriptor {
    std::string id;
    std::string ring;       // e.g. "Polynomial(rho)", "Integer", "QuadExt(5)"
    std::string paper_ref;  // source display this identity is read from
    std::vector<ParamRange> params;
    std::function<Value(const Params&)> lhs;
    std::function<Value(const Params&)> rhs;
    /// Skips parameter cells outside the identity's stated domain.
    std::function<bool(const Params&)> cell_filter;
    /// Marks cells whose truth the source asserts without proof.
    std::function<bool(const Params&)> empirical_when;
};

struct VerificationResult {
    std::string id;
    Params params;
    bool pass = false;
    bool empirical = false;
    std::string witness;  // nonempty exactly when pass is false
    double elapsed_ms = 0.0;
};

inline VerificationResult verify(const IdentityDescriptor& desc, const Params& params) {
    VerificationResult r;
    r.id = desc.id;
    r.params = params;
    r.empirical = desc.empirical_when && desc.empirical_when(params);
    auto t0 = std::chrono::steady_clock::now();
    Value lhs = desc.lhs(params);
    Value rhs = desc.rhs(params);
    auto w = value_witness(lhs, rhs);
    r.pass = !w.has_value();
    if (w) r.witness = *w;
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Per-parameter-name grid overrides (CLI flags map straight onto these).
struct RangeOverrides {
    std::optional<long long> k_max;
    std::optional<long long> n_max;
    std::optional<std::pair<long long, long long>> m_range;
};

inline std::vector<Params> enumerate_cells(const IdentityDescriptor& desc,
                                           const RangeOverrides& over) {
    std::vector<std::pair<std::string, std::pair<long long, long long>>> ranges;
    for (const auto& p : desc.params) {
        long long lo = p.lo, hi = p.hi;
        if (p.name == "k" && over.k_max) hi = *over.k_max;
        if (p.name == "n" && over.n_max) hi = *over.n_max;
        if (p.name == "m" && over.m_range) {
            lo = over.m_range->first;
            hi = over.m_range->second;
        }
        if (lo < p.hard_lo || hi > p.hard_hi)
            throw std::invalid_argument("parameter " + p.name + " of " + desc.id +
                                        " outside hard bounds [" + std::to_string(p.hard_lo) +
                                        ", " + std::to_string(p.hard_hi) + "]");
        if (lo > hi) return {};  // empty requested range: no cells
        ranges.emplace_back(p.name, std::pair(lo, hi));
    }
    std::vector<Params> cells;
    Params cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ranges.size()) {
            if (!desc.cell_filter || desc.cell_filter(cur)) cells.push_back(cur);
            return;
        }
        for (long long v = ranges[i].second.first; v <= ranges[i].second.second; ++v) {
            cur[ranges[i].first] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return cells;
}

inline int default_worker_count() {
    if (const char* env = std::getenv("IDFORGE_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

class Registry {
public:
    void add(IdentityDescriptor desc) {
        if (index_.count(desc.id))
            throw std::invalid_argument("Registry: duplicate id " + desc.id);
        index_[desc.id] = entries_.size();
        entries_.push_back(std::move(desc));
    }

    const IdentityDescriptor& at(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown identity: " + id);
        return entries_[it->second];
    }
    bool contains(const std::string& id) const { return index_.count(id) > 0; }

    const std::vector<IdentityDescriptor>& entries() const { return entries_; }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.id);
        return out;
    }

    static Registry standard();

private:
    std::vector<IdentityDescriptor> entries_;
    std::map<std::string, std::size_t> index_;
};

/// Runs every cell of every requested identity. Cell order (and therefore
/// result order) is fixed up front; workers only race for cell indices.
inline std::vector<VerificationResult> verify_grid(const Registry& reg,
                                                   const std::vector<std::string>& ids,
                                                   const RangeOverrides& over, int workers) {
    std::vector<std::pair<const IdentityDescriptor*, Params>> cells;
    for (const auto& id : ids) {
        const auto& desc = reg.at(id);  // throws on unknown id before any work
        for (auto& p : enumerate_cells(desc, over)) cells.emplace_back(&desc, std::move(p));
    }
    std::vector<VerificationResult> results(cells.size());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(cells.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            results[i] = verify(*cells[i].first, cells[i].second);
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    return results;
}

// ---------------------------------------------------------------------------
// Registry contents
// ---------------------------------------------------------------------------

inline Registry Registry::standard() {
    using detail::int_pow;
    using detail::neg_one_pow;
    Registry reg;

    auto poly = [](MultiPoly p) { return Value(std::move(p)); };
    auto scalar = [](Rational r) { return Value(std::move(r)); };

    // ---- Theorem families -------------------------------------------------

    reg.add({.id = "THM1.i",
             .ring = "Polynomial(rho)",
             .paper_ref = "Theorem 1(i), Eq. (G1)",
             .params = {{"k", 0, 12, 0, 100}},
             .lhs = [=](const Params& p) { return poly(g1_lhs(p.at("k"))); },
             .rhs = [=](const Params& p) { return poly(g1_rhs(p.at("k"))); }});

    reg.add({.id = "THM1.ii",
             .ring = "Polynomial(rho)",
             .paper_ref = "Theorem 1(ii), Eq. (G2)",
             .params = {{"k", 0, 12, 0, 100}},
             .lhs = [=](const Params& p) { return poly(g2_lhs(p.at("k"))); },
             .rhs = [=](const Params& p) { return poly(g2_rhs(p.at("k"))); }});

    reg.add({.id = "THM1.iii",
             .ring = "RationalFn(beta)",
             .paper_ref = "Theorem 1(iii), Eq. (Ex1)",
             .params = {{"n", 0, 12, 0, 80}, {"m", 0, 12, -20, 80}},
             .lhs = [](const Params& p) { return Value(ex1_lhs(p.at("n"), p.at("m"))); },
             .rhs = [](const Params& p) { return Value(ex1_rhs(p.at("n"), p.at("m"))); },
             .cell_filter = nullptr,
             .empirical_when = [](const Params& p) { return p.at("m") < 0; }});

    reg.add({.id = "THM1.iv",
             .ring = "Polynomial(rho,beta)",
             .paper_ref = "Theorem 1(iv), Eq. (Ex2)",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) { return poly(ex2_lhs(p.at("n"))); },
             .rhs = [=](const Params& p) {
                 return poly(closed_diff_moment_poly(Weight::gamma, p.at("n")));
             }});

    reg.add({.id = "THM1.v",
             .ring = "Polynomial(rho,beta)",
             .paper_ref = "Theorem 1(v), Eq. (Ex3)",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) { return poly(ex3_lhs(p.at("n"))); },
             .rhs = [=](const Params& p) {
                 return poly(closed_diff_moment_poly(Weight::gamma, p.at("n")));
             }});

    // ---- (G1) remarks at rational rho -------------------------------------
    // sum_j binom(2k,2j) c^j (2j-1)!!(2k-2j-1)!! for c = 5, 2, -7.

    auto g1_remark_sum = [](long long k, long long c) {
        Rational s(0);
        for (long long j = 0; j <= k; ++j)
            s += Rational(binomial(2 * k, 2 * j) * detail::int_pow(c, j) *
                          double_factorial(2 * j - 1) * double_factorial(2 * k - 2 * j - 1));
        return s;
    };

    reg.add({.id = "R-G1-23",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = 2/3",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) { return scalar(g1_remark_sum(p.at("k"), 5)); },
             .rhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(Rational(factorial(2 * k) * int_pow(3, k), factorial(k)));
             }});

    reg.add({.id = "R-G1-13",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = 1/3",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) { return scalar(g1_remark_sum(p.at("k"), 2)); },
             .rhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(Rational(factorial(2 * k) * int_pow(3, k),
                                        factorial(k) * int_pow(2, k)));
             }});

    reg.add({.id = "R-G1-43",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = 4/3",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) { return scalar(g1_remark_sum(p.at("k"), -7)); },
             .rhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(neg_one_pow(k) *
                               Rational(factorial(2 * k) * int_pow(3, k), factorial(k)));
             }});

    // ---- (G1) remark at rho = sqrt(5): Lucas/Fibonacci pair ----------------

    auto g1_fib_lucas_rhs = [](long long k, bool lucas_part) {
        Rational s(0);
        for (long long j = 0; j <= k; ++j) {
            BigInt seq = lucas_part ? lucas(2 * k - 2 * j) : fibonacci(2 * k - 2 * j);
            s += neg_one_pow(j) * Rational(binomial(2 * k, 2 * j) * seq *
                                           double_factorial(2 * j - 1) *
                                           double_factorial(2 * k - 2 * j - 1));
        }
        return Rational(int_pow(2, k)) * s;
    };

    reg.add({.id = "R-G1-FIB",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = sqrt(5), Fibonacci part",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(Rational(factorial(2 * k) * fibonacci(k), factorial(k)));
             },
             .rhs = [=](const Params& p) { return scalar(g1_fib_lucas_rhs(p.at("k"), false)); }});

    reg.add({.id = "R-G1-LUC",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = sqrt(5), Lucas part",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(Rational(factorial(2 * k) * lucas(k), factorial(k)));
             },
             .rhs = [=](const Params& p) { return scalar(g1_fib_lucas_rhs(p.at("k"), true)); }});

    // ---- (G1) remarks at rho = i -------------------------------------------

    reg.add({.id = "R-G1-I-4N",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = i, k = 4n",
             .params = {{"n", 0, 10, 0, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 return scalar(Rational(factorial(8 * n), factorial(4 * n)));
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long j = 0; j <= 4 * n; ++j)
                     s += Rational(binomial(8 * n, 2 * j) * double_factorial(2 * j - 1) *
                                   double_factorial(8 * n - 2 * j - 1));
                 return scalar(s);
             }});

    auto g1_i_4n1_lhs = [=](const Params& p) {
        long long n = p.at("n");
        return scalar(Rational(factorial(8 * n + 2), factorial(4 * n + 1)) *
                      Rational(-4).pow(n));
    };

    reg.add({.id = "R-G1-I-4N1-A",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = i, k = 4n+1, real part",
             .params = {{"n", 0, 10, 0, 80}},
             .lhs = g1_i_4n1_lhs,
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long m = 0; m <= 2 * n; ++m)
                     s += neg_one_pow(m) * Rational(binomial(8 * n + 2, 4 * m + 2) *
                                                    double_factorial(4 * m + 1) *
                                                    double_factorial(8 * n - 4 * m - 1));
                 return scalar(Rational(int_pow(2, 4 * n + 1)) * s);
             }});

    reg.add({.id = "R-G1-I-4N1-B",
             .ring = "Integer",
             .paper_ref = "Remark to (G1): rho = i, k = 4n+1, imaginary part",
             .params = {{"n", 0, 10, 0, 80}},
             .lhs = g1_i_4n1_lhs,
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long m = 0; m <= 2 * n; ++m)
                     s += neg_one_pow(m) * Rational(binomial(8 * n + 2, 4 * m) *
                                                    double_factorial(4 * m - 1) *
                                                    double_factorial(8 * n - 4 * m + 1));
                 return scalar(Rational(int_pow(2, 4 * n + 1)) * s);
             }});

    // ---- (G2) remarks -------------------------------------------------------

    reg.add({.id = "R-G2-HALF",
             .ring = "Integer",
             .paper_ref = "Remark to (G2): rho = 1/2",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params&) { return scalar(Rational(1)); },
             .rhs = [=](const Params& p) {
                 long long k = p.at("k");
                 Rational s(0);
                 for (long long j = 0; j <= 2 * k; ++j) {
                     Rational inner(0);
                     for (long long m = 0; 2 * m <= j; ++m)
                         inner += Rational(binomial(k, j - 2 * m) * binomial(k - j + 2 * m, m));
                     s += neg_one_pow(j) * inner;
                 }
                 return scalar(s);
             }});

    reg.add({.id = "R-G2-I-RE",
             .ring = "Integer",
             .paper_ref = "Remark to (G2): rho = i, real part",
             .params = {{"n", 0, 10, 0, 80}},
             .lhs = [=](const Params& p) { return scalar(Rational(4).pow(p.at("n"))); },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long j = 0; j <= 4 * n; ++j) {
                     Rational inner(0);
                     for (long long m = 0; m <= j; ++m)
                         inner += neg_one_pow(m) *
                                  Rational(int_pow(4, j - m) * binomial(4 * n, 2 * j - 2 * m) *
                                           binomial(4 * n - 2 * j + 2 * m, m));
                     s += neg_one_pow(j) * inner;
                 }
                 return scalar(neg_one_pow(n) * s / Rational(int_pow(16, n)));
             }});

    reg.add({.id = "R-G2-I-IM",
             .ring = "Integer",
             .paper_ref = "Remark to (G2): rho = i, imaginary part",
             .params = {{"n", 0, 10, 0, 80}},
             .lhs = [=](const Params&) { return scalar(Rational(0)); },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long j = 0; j <= 4 * n; ++j) {
                     Rational inner(0);
                     for (long long m = 0; m <= j; ++m)
                         inner += neg_one_pow(m) *
                                  Rational(int_pow(4, j - m) *
                                           binomial(4 * n, 2 * j - 2 * m + 1) *
                                           binomial(4 * n - 2 * j - 1 + 2 * m, m));
                     s += neg_one_pow(j) * inner;
                 }
                 return scalar(s);
             }});

    // ---- (Ex1) remarks ------------------------------------------------------

    reg.add({.id = "R-EX1-B1",
             .ring = "Integer",
             .paper_ref = "Remark i to (Ex1): beta = 1",
             .params = {{"n", 0, 10, 0, 80}, {"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 Rational s(0);
                 for (long long j = 0; j <= n; ++j)
                     s += neg_one_pow(j) * Rational(binomial(n, j) * binomial(j + k, j));
                 return scalar(s);
             },
             .rhs = [=](const Params& p) {
                 return scalar(neg_one_pow(p.at("n")) * Rational(binomial(p.at("k"), p.at("n"))));
             }});

    reg.add({.id = "R-EX1-B12",
             .ring = "Integer",
             .paper_ref = "Remark ii to (Ex1): beta = 1/2",
             .params = {{"n", 0, 10, 0, 80}, {"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 Rational s(0);
                 for (long long j = 0; j <= n; ++j)
                     s += neg_one_pow(j) *
                          Rational(double_factorial(2 * n - 1) * double_factorial(2 * j + 2 * k - 1),
                                   factorial(j) * factorial(n - j) * double_factorial(2 * j - 1));
                 return scalar(s);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 return scalar(neg_one_pow(n) * Rational(int_pow(2, n) * binomial(k, n) *
                                                         double_factorial(2 * k - 1)));
             }});

    // ---- (Ex2) remarks ------------------------------------------------------

    reg.add({.id = "R-EX2-B12",
             .ring = "Integer",
             .paper_ref = "Remark i to (Ex2): beta = 1/2",
             .params = {{"n", 0, 10, 0, 80}, {"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 Rational s(0);
                 for (long long j = 0; j <= n; ++j)
                     s += neg_one_pow(n - j) *
                          Rational(binomial(n, j) * double_factorial(2 * n + 2 * k + 2 * j - 1),
                                   double_factorial(2 * j - 1));
                 return scalar(s);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 return scalar(Rational(
                     int_pow(2, n) * factorial(n + k) * double_factorial(2 * n + 2 * k - 1),
                     factorial(k) * double_factorial(2 * n - 1)));
             }});

    auto explr_lhs = [](long long n) {
        MultiPoly acc;
        for (long long m = 0; m <= n; ++m) {
            MultiPoly inner;
            for (long long k = 0; k <= m; ++k) {
                BigInt c = binomial(m, k) * binomial(n - m, k);
                if (c == 0) continue;
                inner.add_term(Monomial::of(Var::rho, static_cast<std::uint32_t>(k)),
                               Rational(c));
            }
            acc += neg_one_pow(m) * inner;
        }
        return acc;
    };

    reg.add({.id = "R-EX2-EXPLR",
             .ring = "Polynomial(rho)",
             .paper_ref = "Remark ii to (Ex2): beta = 1, Eq. (explr)",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) { return poly(explr_lhs(p.at("n"))); },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 if (n % 2) return poly(MultiPoly::zero());
                 MultiPoly one_minus_rho =
                     MultiPoly::constant(Rational(1)) - MultiPoly::variable(Var::rho);
                 return poly(one_minus_rho.pow(n / 2));
             }});

    reg.add({.id = "R-EX2-COEF",
             .ring = "Integer",
             .paper_ref = "Remark iii to (Ex2): coefficients of rho^k in (explr)",
             .params = {{"n", 0, 10, 0, 80}, {"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 Rational s(0);
                 for (long long m = k; m <= n; ++m)
                     s += neg_one_pow(m - k) * Rational(binomial(m, k) * binomial(n - m, k));
                 return scalar(s);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 if (n % 2) return scalar(Rational(0));
                 return scalar(Rational(binomial(n / 2, k)));
             }});

    reg.add({.id = "R-EX2-RHO1-B1",
             .ring = "Integer",
             .paper_ref = "Remark iv to (Ex2): beta = 1, rho = 1 (n >= 1)",
             .params = {{"n", 1, 12, 1, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long m = 0; m <= n; ++m) {
                     Rational inner(0);
                     for (long long k = 0; k <= m; ++k)
                         inner += Rational(binomial(m, k) * binomial(n - m, k));
                     s += neg_one_pow(m) * inner;
                 }
                 return scalar(s);
             },
             .rhs = [=](const Params&) { return scalar(Rational(0)); }});

    reg.add({.id = "R-EX2-B12-X",
             .ring = "Polynomial(x)",
             .paper_ref = "Remark v to (Ex2): beta = 1/2, x = 2 rho",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 MultiPoly acc;
                 for (long long m = 0; m <= n; ++m) {
                     MultiPoly inner;
                     for (long long k = 0; k <= m; ++k) {
                         if (n - m - k < 0) continue;  // 1/(negative)! vanishes
                         Rational c(BigInt(1), factorial(k) * factorial(m - k) *
                                                   factorial(n - m - k) *
                                                   double_factorial(2 * k - 1));
                         inner.add_term(Monomial::of(Var::x, static_cast<std::uint32_t>(k)), c);
                     }
                     acc += neg_one_pow(m) *
                            Rational(double_factorial(2 * m - 1) *
                                     double_factorial(2 * n - 2 * m - 1)) *
                            inner;
                 }
                 return poly(acc);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 if (n % 2) return poly(MultiPoly::zero());
                 MultiPoly two_minus_x =
                     MultiPoly::constant(Rational(2)) - MultiPoly::variable(Var::x);
                 return poly(Rational(double_factorial(n - 1), factorial(n / 2)) *
                             two_minus_x.pow(n / 2));
             }});

    reg.add({.id = "R-EX2-X0",
             .ring = "Integer",
             .paper_ref = "Remark vi to (Ex2): beta = 1/2, x = 0",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 Rational s(0);
                 for (long long m = 0; m <= n; ++m)
                     s += neg_one_pow(m) * Rational(binomial(n, m) * double_factorial(2 * m - 1) *
                                                    double_factorial(2 * n - 2 * m - 1));
                 return scalar(s);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 if (n % 2) return scalar(Rational(0));
                 return scalar(Rational(factorial(n) * double_factorial(n - 1) * int_pow(2, n / 2),
                                        factorial(n / 2)));
             }});

    reg.add({.id = "R-EX2-RHO1",
             .ring = "Polynomial(beta)",
             .paper_ref = "Remark vii to (Ex2): rho = 1 (n >= 1)",
             .params = {{"n", 1, 12, 1, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 MultiPoly acc;
                 for (long long m = 0; m <= n; ++m) {
                     MultiPoly inner;
                     for (long long k = 0; k <= m; ++k) {
                         BigInt c = binomial(m, k) * binomial(n - m, k) * factorial(k);
                         if (c == 0) continue;
                         inner += Rational(c) * poch_mpoly(Var::beta, k, m - k);
                     }
                     acc += neg_one_pow(m) * Rational(binomial(n, m)) *
                            poch_mpoly(Var::beta, 0, n - m) * inner;
                 }
                 return poly(acc);
             },
             .rhs = [=](const Params&) { return poly(MultiPoly::zero()); }});

    // ---- (Ex3) remarks ------------------------------------------------------

    reg.add({.id = "R-EX3-RHO0",
             .ring = "Polynomial(beta)",
             .paper_ref = "Remark i to (Ex3): rho = 0",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 MultiPoly acc;
                 for (long long m = 0; m <= n; ++m)
                     acc += neg_one_pow(n - m) * Rational(binomial(n, m)) *
                            poch_mpoly(Var::beta, 0, n - m) * poch_mpoly(Var::beta, 0, m);
                 return poly(acc);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 if (n % 2) return poly(MultiPoly::zero());
                 return poly(Rational(factorial(n), factorial(n / 2)) *
                             poch_mpoly(Var::beta, 0, n / 2));
             }});

    reg.add({.id = "VANDERMONDE",
             .ring = "Polynomial(alpha,beta)",
             .paper_ref = "Remark i to (Ex3): umbral companion identity",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 MultiPoly acc;
                 for (long long m = 0; m <= n; ++m)
                     acc += Rational(binomial(n, m)) * poch_mpoly(Var::beta, 0, n - m) *
                            poch_mpoly(Var::alpha, 0, m);
                 return poly(acc);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 MultiPoly acc = MultiPoly::constant(Rational(1));
                 MultiPoly sum = MultiPoly::variable(Var::alpha) + MultiPoly::variable(Var::beta);
                 for (long long i = 0; i < n; ++i)
                     acc = acc * (sum + MultiPoly::constant(Rational(i)));
                 return poly(acc);
             }});

    reg.add({.id = "R-EX3-HALF",
             .ring = "Polynomial(beta)",
             .paper_ref = "Remark ii to (Ex3): rho = 1/2",
             .params = {{"n", 0, 12, 0, 80}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 MultiPoly acc;
                 for (long long m = 0; m <= n; ++m) {
                     MultiPoly inner;
                     for (long long j = 0; j <= m; ++j)
                         inner += Rational(binomial(m, j)) * poch_mpoly(Var::beta, 0, n - j) *
                                  poch_mpoly(Var::beta, m - j, j);
                     acc += neg_one_pow(n - m) * Rational(binomial(n, m)) *
                            Rational(BigInt(1), int_pow(2, m)) * inner;
                 }
                 return poly(acc);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n");
                 if (n % 2) return poly(MultiPoly::zero());
                 return poly(Rational(factorial(n), int_pow(2, n / 2) * factorial(n / 2)) *
                             poch_mpoly(Var::beta, 0, n / 2));
             }});

    reg.add({.id = "R-EX3-COEF",
             .ring = "Polynomial(beta)",
             .paper_ref = "Remark iii to (Ex3): coefficients of rho^k",
             .params = {{"n", 0, 10, 0, 80}, {"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 MultiPoly acc;
                 for (long long m = k; m + k <= n; ++m)
                     acc += neg_one_pow(m - k) *
                            Rational(factorial(n - k),
                                     factorial(m - k) * factorial(n - m - k)) *
                            poch_mpoly(Var::beta, 0, m) * poch_mpoly(Var::beta, 0, n - m);
                 return poly(acc);
             },
             .rhs = [=](const Params& p) {
                 long long n = p.at("n"), k = p.at("k");
                 if (n % 2) return poly(MultiPoly::zero());
                 return poly(Rational(factorial(n / 2) * binomial(n - k, n / 2)) *
                             poch_mpoly(Var::beta, 0, k) * poch_mpoly(Var::beta, 0, n / 2));
             },
             .cell_filter = [](const Params& p) { return p.at("k") <= p.at("n"); }});

    // ---- Corollary and closure facts ---------------------------------------

    reg.add({.id = "COR-PHI-LUC",
             .ring = "Integer",
             .paper_ref = "Corollary (golden ratio), Lucas form",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(Rational(2 * factorial(2 * k) * lucas(k), factorial(k)));
             },
             .rhs = [=](const Params& p) {
                 long long k = p.at("k");
                 Rational s(0);
                 for (long long j = 0; j <= k; ++j)
                     s += neg_one_pow(j) *
                          Rational(binomial(2 * k, 2 * j) * double_factorial(2 * j - 1) *
                                   double_factorial(2 * k - 2 * j - 1) *
                                   (lucas(2 * k - 2 * j) * lucas(j) -
                                    5 * fibonacci(2 * k - 2 * j) * fibonacci(j)));
                 return scalar(s);
             }});

    reg.add({.id = "COR-PHI-FIB",
             .ring = "Integer",
             .paper_ref = "Corollary (golden ratio), Fibonacci form",
             .params = {{"k", 0, 10, 0, 100}},
             .lhs = [=](const Params& p) {
                 long long k = p.at("k");
                 return scalar(Rational(2 * factorial(2 * k) * fibonacci(k), factorial(k)));
             },
             .rhs = [=](const Params& p) {
                 long long k = p.at("k");
                 Rational s(0);
                 for (long long j = 0; j <= k; ++j)
                     s += neg_one_pow(j) *
                          Rational(binomial(2 * k, 2 * j) * double_factorial(2 * j - 1) *
                                   double_factorial(2 * k - 2 * j - 1) *
                                   (fibonacci(2 * k - 2 * j) * lucas(j) -
                                    lucas(2 * k - 2 * j) * fibonacci(j)));
                 return scalar(s);
             }});

    reg.add({.id = "POCH-ADD",
             .ring = "RationalFn(beta)",
             .paper_ref = "Rising-factorial addition law",
             .params = {{"n", -5, 8, -20, 80}, {"m", -5, 8, -20, 80}},
             .lhs = [](const Params& p) {
                 long long n = p.at("n"), m = p.at("m");
                 return Value(poch_ratfn(Var::beta, n) * poch_ratfn_shifted(Var::beta, n, m));
             },
             .rhs = [](const Params& p) {
                 return Value(poch_ratfn(Var::beta, p.at("n") + p.at("m")));
             }});

    reg.add({.id = "LF-INV",
             .ring = "Integer",
             .paper_ref = "Corollary proof: L_n^2 - 5 F_n^2 = 4 (-1)^n",
             .params = {{"n", 0, 12, 0, 400}},
             .lhs = [=](const Params& p) {
                 long long n = p.at("n");
                 return scalar(Rational(lucas(n) * lucas(n) - 5 * fibonacci(n) * fibonacci(n)));
             },
             .rhs = [=](const Params& p) { return scalar(Rational(4) * neg_one_pow(p.at("n"))); }});

    reg.add({.id = "PHI-POW",
             .ring = "QuadExt(5)",
             .paper_ref = "Corollary proof: (1+phi)^n = L_n/2 + F_n sqrt(5)/2",
             .params = {{"n", 0, 12, 0, 400}},
             .lhs = [](const Params& p) {
                 QuadExtNum one_plus_phi = QuadExtNum::one(5) + golden_ratio();
                 return Value(one_plus_phi.pow(static_cast<unsigned long long>(p.at("n"))));
             },
             .rhs = [](const Params& p) {
                 long long n = p.at("n");
                 return Value(QuadExtNum(Rational(lucas(n), BigInt(2)),
                                         Rational(fibonacci(n), BigInt(2)), 5));
             }});

    return reg;
}

/// Deliberately perturbed (G1) fixture (right side shifted by +1). Not part
/// of the standard registry; callers opt in to exercise the failure path
/// end to end. The expected witness sits at the constant term.
inline void add_negative_control(Registry& reg) {
    reg.add({.id = "X-NEGCTRL",
             .ring = "Polynomial(rho)",
             .paper_ref = "negative control: Eq. (G1) with right side + 1",
             .params = {{"k", 0, 4, 0, 100}},
             .lhs = [](const Params& p) { return Value(g1_lhs(p.at("k"))); },
             .rhs = [](const Params& p) {
                 return Value(g1_rhs(p.at("k")) + MultiPoly::constant(Rational(1)));
             }});
}

}  // namespace idforge

#endif
