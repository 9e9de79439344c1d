/**
 * @file stochastic.hpp
 * @brief Correlated normal and gamma pair samplers, exact closed-form
 *        moments, and streaming Monte Carlo estimation.
 *
 * Floating point is confined to this module; the exact layers never see a
 * double. Samplers draw from a single per-instance generator stream, so a
 * seed fully determines every estimate. Parallel estimation uses one
 * stream per worker seeded as seed XOR stream-index and merges partial
 * results by exact count-weighted pooling in a fixed order.
 *
 * The correlated gamma pair is sampled through its Poisson mixture:
 * X ~ Gamma(beta), N|X ~ Poisson(rho X/(1-rho)), Y|N ~ (1-rho) Gamma(beta+N).
 * This avoids evaluating the Bessel-form joint density entirely; the
 * construction is certified against the exact moment formulas by tests.
 */
#ifndef IDFORGE_STOCHASTIC_HPP
#define IDFORGE_STOCHASTIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "idforge/combinatorics.hpp"
#include "idforge/multipoly.hpp"
#include "idforge/orthopoly.hpp"

namespace idforge {

// ---------------------------------------------------------------------------
// Exact closed forms
// ---------------------------------------------------------------------------

/// E(X-Y)^n for the correlated standard normal pair:
/// 0 for odd n, n!/(n/2)! (1-rho)^(n/2) for even n.
inline Rational closed_moment_normal(long long n, const Rational& rho) {
    if (n < 0) throw std::invalid_argument("closed_moment_normal: negative order");
    if (n % 2) return Rational(0);
    return Rational(factorial(n), factorial(n / 2)) * (Rational(1) - rho).pow(n / 2);
}

/// E(X-Y)^n for the correlated gamma pair:
/// 0 for odd n, n!/(n/2)! (beta)^(n/2) (1-rho)^(n/2) for even n.
inline Rational closed_moment_gamma(long long n, const Rational& beta, const Rational& rho) {
    if (n < 0) throw std::invalid_argument("closed_moment_gamma: negative order");
    if (n % 2) return Rational(0);
    return Rational(factorial(n), factorial(n / 2)) * rising_factorial(beta, n / 2) *
           (Rational(1) - rho).pow(n / 2);
}

/// E X^n = (beta)^(n) for X ~ Gamma(beta), symbolically in beta.
inline MultiPoly gamma_raw_moment(long long n) {
    if (n < 0) throw std::invalid_argument("gamma_raw_moment: negative order");
    return poch_mpoly(Var::beta, 0, n);
}

inline Rational gamma_raw_moment(long long n, const Rational& beta) {
    if (n < 0) throw std::invalid_argument("gamma_raw_moment: negative order");
    return rising_factorial(beta, n);
}

/// E X^m Y^l at a rational point, via the connection-coefficient expansion.
inline Rational mixed_moment_value(Weight w, int m, int l, const Rational& rho,
                                   const Rational& beta = Rational(0)) {
    MultiPoly p = mixed_moment_poly(w, m, l);
    std::map<Var, Rational> assignment{{Var::rho, rho}};
    if (w == Weight::gamma) assignment.emplace(Var::beta, beta);
    return p.eval(assignment);
}

// ---------------------------------------------------------------------------
// Random draws
// ---------------------------------------------------------------------------

namespace mc {

/// One generator stream: uniforms, normals (Marsaglia polar, with spare),
/// gammas (Marsaglia-Tsang) and Poissons (inversion with additive split).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : rng_(seed) {}

    /// Uniform on (0,1), never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(rng_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    std::pair<double, double> normal_pair() {
        double a = normal();
        double b = normal();
        return {a, b};
    }

    double gamma(double shape) {
        if (shape <= 0.0) throw std::invalid_argument("RandomStream::gamma: shape must be > 0");
        if (shape < 1.0) {
            double g = gamma(shape + 1.0);
            return g * std::pow(uniform(), 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    long long poisson(double lambda) {
        if (lambda < 0.0) throw std::invalid_argument("RandomStream::poisson: negative mean");
        long long total = 0;
        while (lambda > 30.0) {  // additivity keeps exp(-lambda) well scaled
            total += poisson_small(30.0);
            lambda -= 30.0;
        }
        return total + poisson_small(lambda);
    }

private:
    long long poisson_small(double lambda) {
        double limit = std::exp(-lambda);
        long long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mc

/// Correlated standard normal pair: X = Z1, Y = rho Z1 + sqrt(1-rho^2) Z2.
class GaussianPairSampler {
public:
    GaussianPairSampler(double rho, std::uint64_t seed) : rho_(rho), stream_(seed) {
        if (!(rho > -1.0 && rho < 1.0))
            throw std::invalid_argument("GaussianPairSampler: rho must lie in (-1,1)");
        mix_ = std::sqrt(1.0 - rho * rho);
    }

    double rho() const { return rho_; }

    std::pair<double, double> next() {
        auto [z1, z2] = stream_.normal_pair();
        return {z1, rho_ * z1 + mix_ * z2};
    }

private:
    double rho_, mix_;
    mc::RandomStream stream_;
};

/// Correlated gamma pair via the Poisson mixture; marginals Gamma(beta),
/// conditional mean E(Y|X) = beta (1-rho) + rho X.
class GammaPairSampler {
public:
    GammaPairSampler(double beta, double rho, std::uint64_t seed)
        : beta_(beta), rho_(rho), stream_(seed) {
        if (!(beta > 0.0)) throw std::invalid_argument("GammaPairSampler: beta must be > 0");
        if (!(rho >= 0.0 && rho < 1.0))
            throw std::invalid_argument("GammaPairSampler: gamma requires rho in [0,1)");
    }

    double beta() const { return beta_; }
    double rho() const { return rho_; }

    std::pair<double, double> next() {
        double x = stream_.gamma(beta_);
        long long n = rho_ == 0.0 ? 0 : stream_.poisson(rho_ * x / (1.0 - rho_));
        double y = (1.0 - rho_) * stream_.gamma(beta_ + static_cast<double>(n));
        return {x, y};
    }

private:
    double beta_, rho_;
    mc::RandomStream stream_;
};

// ---------------------------------------------------------------------------
// Estimation
// ---------------------------------------------------------------------------

struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long n_samples = 0;
};

/// Streaming mean/variance (Welford); mergeable by count-weighted pooling.
struct MomentAccumulator {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v) {
        ++n;
        double d = v - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (v - mean);
    }

    void merge(const MomentAccumulator& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        double d = o.mean - mean;
        long long total = n + o.n;
        mean += d * static_cast<double>(o.n) / static_cast<double>(total);
        m2 += o.m2 + d * d * (static_cast<double>(n) * static_cast<double>(o.n) /
                              static_cast<double>(total));
        n = total;
    }

    MomentEstimate estimate() const {
        if (n < 2) throw std::domain_error("MomentAccumulator: need at least 2 samples");
        double variance = m2 / static_cast<double>(n - 1);
        return {mean, std::sqrt(variance / static_cast<double>(n)), n};
    }
};

/// The statistics the cross-validation grid knows how to measure.
struct Statistic {
    enum class Kind { diff_power, cross_moment };
    Kind kind = Kind::diff_power;
    int p = 0;  // exponent of (X - Y)
    int m = 0, l = 0;

    static Statistic diff_power(int p) {
        Statistic s;
        s.kind = Kind::diff_power;
        s.p = p;
        return s;
    }
    static Statistic cross_moment(int m, int l) {
        Statistic s;
        s.kind = Kind::cross_moment;
        s.m = m;
        s.l = l;
        return s;
    }

    double eval(double x, double y) const {
        if (kind == Kind::diff_power) return std::pow(x - y, p);
        return std::pow(x, m) * std::pow(y, l);
    }

    std::string label() const {
        if (kind == Kind::diff_power) return "E(X-Y)^" + std::to_string(p);
        return "E X^" + std::to_string(m) + " Y^" + std::to_string(l);
    }
};

inline constexpr long long kMinSamples = 1000;

template <typename Sampler>
MomentEstimate estimate_moment(Sampler& sampler, const Statistic& stat, long long n_samples) {
    if (n_samples < kMinSamples)
        throw std::invalid_argument("estimate_moment: need at least 1000 samples");
    MomentAccumulator acc;
    for (long long i = 0; i < n_samples; ++i) {
        auto [x, y] = sampler.next();
        acc.add(stat.eval(x, y));
    }
    return acc.estimate();
}

/// Parallel estimation over independent streams. make_sampler(seed) must
/// produce a fresh sampler; worker i uses seed XOR i. Partial results are
/// pooled in stream order, so a given (seed, workers) pair is reproducible.
template <typename MakeSampler>
MomentEstimate estimate_moment_parallel(MakeSampler&& make_sampler, const Statistic& stat,
                                        long long n_samples, std::uint64_t seed, int workers) {
    if (n_samples < kMinSamples)
        throw std::invalid_argument("estimate_moment_parallel: need at least 1000 samples");
    if (workers < 1) workers = 1;
    std::vector<MomentAccumulator> parts(workers);
    auto run = [&](int i) {
        long long chunk = n_samples / workers + (i < n_samples % workers ? 1 : 0);
        auto sampler = make_sampler(seed ^ static_cast<std::uint64_t>(i));
        for (long long s = 0; s < chunk; ++s) {
            auto [x, y] = sampler.next();
            parts[i].add(stat.eval(x, y));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(run, i);
        for (auto& t : pool) t.join();
    }
    MomentAccumulator total;
    for (const auto& part : parts) total.merge(part);
    return total.estimate();
}

/// Estimates several statistics from one shared sample stream (one pass).
template <typename MakeSampler>
std::vector<MomentEstimate> estimate_moments_parallel(MakeSampler&& make_sampler,
                                                      const std::vector<Statistic>& stats,
                                                      long long n_samples, std::uint64_t seed,
                                                      int workers) {
    if (n_samples < kMinSamples)
        throw std::invalid_argument("estimate_moments_parallel: need at least 1000 samples");
    if (workers < 1) workers = 1;
    std::vector<std::vector<MomentAccumulator>> parts(
        workers, std::vector<MomentAccumulator>(stats.size()));
    auto run = [&](int i) {
        long long chunk = n_samples / workers + (i < n_samples % workers ? 1 : 0);
        auto sampler = make_sampler(seed ^ static_cast<std::uint64_t>(i));
        for (long long s = 0; s < chunk; ++s) {
            auto [x, y] = sampler.next();
            for (std::size_t j = 0; j < stats.size(); ++j) parts[i][j].add(stats[j].eval(x, y));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(run, i);
        for (auto& t : pool) t.join();
    }
    std::vector<MomentEstimate> out;
    out.reserve(stats.size());
    for (std::size_t j = 0; j < stats.size(); ++j) {
        MomentAccumulator total;
        for (int i = 0; i < workers; ++i) total.merge(parts[i][j]);
        out.push_back(total.estimate());
    }
    return out;
}

/// (estimate - exact) in standard-error units.
inline double z_compare(const MomentEstimate& est, const Rational& exact) {
    if (!(est.std_error > 0.0)) throw std::domain_error("z_compare: zero standard error");
    return (est.mean - exact.to_double()) / est.std_error;
}

// ---------------------------------------------------------------------------
// Conditional-mean trend check
// ---------------------------------------------------------------------------

struct TrendCheckResult {
    bool ok = false;
    double max_abs_z = 0.0;
    int bins = 0;
};

/// Bins samples by X and compares the per-bin mean of Y against
/// expected_intercept + expected_slope * mean(X in bin). Because the true
/// conditional mean is linear in X, the comparison is exact in expectation
/// at any bin width; |z| <= 5 per bin is the acceptance gate.
template <typename Sampler>
TrendCheckResult conditional_mean_trend(Sampler& sampler, double expected_intercept,
                                        double expected_slope, long long n_samples,
                                        int n_bins = 20) {
    if (n_samples < kMinSamples)
        throw std::invalid_argument("conditional_mean_trend: need at least 1000 samples");
    if (n_bins < 1) throw std::invalid_argument("conditional_mean_trend: need at least 1 bin");
    std::vector<std::pair<double, double>> data;
    data.reserve(n_samples);
    for (long long i = 0; i < n_samples; ++i) data.push_back(sampler.next());
    std::sort(data.begin(), data.end());

    TrendCheckResult result;
    result.ok = true;
    result.bins = n_bins;
    std::size_t start = 0;
    for (int b = 0; b < n_bins; ++b) {
        std::size_t stop = data.size() * (b + 1) / n_bins;
        MomentAccumulator xs, ys;
        for (std::size_t i = start; i < stop; ++i) {
            xs.add(data[i].first);
            ys.add(data[i].second);
        }
        start = stop;
        if (ys.n < 2) continue;
        MomentEstimate ye = ys.estimate();
        double expected = expected_intercept + expected_slope * xs.mean;
        if (!(ye.std_error > 0.0)) continue;
        double z = (ye.mean - expected) / ye.std_error;
        result.max_abs_z = std::max(result.max_abs_z, std::abs(z));
        if (std::abs(z) > 5.0) result.ok = false;
    }
    return result;
}

}  // namespace idforge

#endif
