// idforge command-line front end.
//
// Subcommands:
//   verify    run exact verification grids over the identity registry
//   list      print the registry (ids, rings, parameter schemas, anchors)
//   mc-check  Monte Carlo cross-validation of the closed moment formulas
//   bench     wall-time measurements of the exact engine
//
// Exit codes: 0 success, 1 verification/statistical failure, 2 usage or
// configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "idforge/report.hpp"

namespace {

using namespace idforge;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

void check_format(const std::string& f) {
    if (f != "json" && f != "markdown" && f != "csv")
        throw std::invalid_argument("unknown format: " + f + " (expected json|markdown|csv)");
}

std::pair<long long, long long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must look like lo..hi, got: " + s);
    return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
}

struct CommonOpts {
    std::vector<std::string> ids;
    bool all = false;
    long long k_max = -1;
    long long n_max = -1;
    std::string m_range;
    int workers = default_worker_count();
    std::string format;
    std::string output;
    bool no_timestamp = false;
};

std::vector<std::string> select_ids(const Registry& reg, const CommonOpts& opt) {
    if (opt.all || opt.ids.empty()) {
        if (!opt.all && opt.ids.empty())
            throw std::invalid_argument("pass --all or at least one --id");
        return reg.ids();
    }
    for (const auto& id : opt.ids) reg.at(id);  // reject unknown ids up front
    return opt.ids;
}

RangeOverrides make_overrides(const CommonOpts& opt) {
    RangeOverrides over;
    if (opt.k_max >= 0) over.k_max = opt.k_max;
    if (opt.n_max >= 0) over.n_max = opt.n_max;
    if (!opt.m_range.empty()) over.m_range = parse_range(opt.m_range);
    return over;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const CommonOpts& opt, bool with_negative_control) {
    check_format(opt.format);
    Registry reg = Registry::standard();
    if (with_negative_control) add_negative_control(reg);
    auto ids = select_ids(reg, opt);
    auto over = make_overrides(opt);
    auto results = verify_grid(reg, ids, over, opt.workers);

    OrderedJson config;
    config["ids"] = opt.all || opt.ids.empty() ? std::vector<std::string>{"all"} : opt.ids;
    if (over.k_max) config["k_max"] = *over.k_max;
    if (over.n_max) config["n_max"] = *over.n_max;
    if (over.m_range) config["m_range"] = {{"lo", over.m_range->first}, {"hi", over.m_range->second}};
    config["workers"] = opt.workers;
    config["format"] = opt.format;

    std::string text;
    if (opt.format == "json")
        text = verify_report_json(reg, results, config, !opt.no_timestamp).dump(2);
    else if (opt.format == "markdown")
        text = verify_report_markdown(reg, results);
    else
        text = verify_report_csv(reg, results);
    write_output(text, opt.output);

    auto s = summarize(results);
    std::cerr << "verified " << s.cells << " cells across " << s.families << " identities: "
              << s.passed << " pass, " << s.failed << " fail\n";
    return s.failed == 0 ? 0 : 1;
}

// ---- list -------------------------------------------------------------------

int run_list(const CommonOpts& opt) {
    check_format(opt.format);
    Registry reg = Registry::standard();
    std::vector<const IdentityDescriptor*> entries;
    if (opt.ids.empty()) {
        for (const auto& e : reg.entries()) entries.push_back(&e);
    } else {
        for (const auto& id : opt.ids) entries.push_back(&reg.at(id));
    }
    std::string text;
    if (opt.format == "json") text = list_report_json(entries).dump(2);
    else if (opt.format == "markdown") text = list_report_markdown(entries);
    else text = list_report_csv(entries);
    write_output(text, opt.output);
    return 0;
}

// ---- mc-check -----------------------------------------------------------------

struct McOpts {
    double samples = 1e6;
    std::uint64_t seed = 42;
    std::string which_case = "all";
    std::vector<std::string> rho;
    std::vector<std::string> beta;
};

struct McCell {
    Weight w;
    Rational rho;
    Rational beta;  // unused for the normal case
};

int run_mc_check(const CommonOpts& opt, const McOpts& mc) {
    check_format(opt.format);
    long long n_samples = static_cast<long long>(mc.samples);
    if (n_samples < 1000) throw std::invalid_argument("--samples must be at least 1e3");
    if (mc.which_case != "all" && mc.which_case != "normal" && mc.which_case != "gamma")
        throw std::invalid_argument("--case must be normal, gamma or all");
    if (n_samples < 100000)
        std::cerr << "warning: " << n_samples
                  << " samples gives wide standard errors; the |z| <= 5 gate still applies\n";

    std::vector<Rational> normal_rhos, gamma_rhos, betas;
    if (mc.rho.empty()) {
        normal_rhos = {Rational(-1, 2), Rational(0), Rational(3, 10), Rational(9, 10)};
        gamma_rhos = {Rational(0), Rational(3, 10), Rational(7, 10)};
    } else {
        for (const auto& s : mc.rho) {
            Rational r = Rational::parse(s);
            normal_rhos.push_back(r);
            gamma_rhos.push_back(r);
        }
    }
    if (mc.beta.empty()) {
        betas = {Rational(1, 2), Rational(1), Rational(5, 2)};
    } else {
        for (const auto& s : mc.beta) betas.push_back(Rational::parse(s));
    }

    std::vector<McCell> cells;
    if (mc.which_case != "gamma") {
        for (const auto& r : normal_rhos) {
            if (!(r > Rational(-1) && r < Rational(1)))
                throw std::invalid_argument("normal requires rho in (-1,1), got " + r.to_string());
            cells.push_back({Weight::normal, r, Rational(0)});
        }
    }
    if (mc.which_case != "normal") {
        for (const auto& r : gamma_rhos) {
            if (!(r >= Rational(0) && r < Rational(1)))
                throw std::invalid_argument("gamma requires rho in [0,1), got " + r.to_string());
            for (const auto& b : betas) {
                if (!(b > Rational(0)))
                    throw std::invalid_argument("gamma requires beta > 0, got " + b.to_string());
                cells.push_back({Weight::gamma, r, b});
            }
        }
    }

    const std::vector<Statistic> stats = {Statistic::diff_power(2), Statistic::diff_power(4),
                                          Statistic::diff_power(6), Statistic::cross_moment(1, 1)};

    std::vector<McRow> rows;
    std::size_t cell_index = 0;
    for (const auto& cell : cells) {
        std::uint64_t cell_seed = mix64(mc.seed ^ mix64(cell_index + 1));
        ++cell_index;
        auto estimate_all = [&](std::uint64_t s) {
            if (cell.w == Weight::normal) {
                double rho = cell.rho.to_double();
                return estimate_moments_parallel(
                    [rho](std::uint64_t seed) { return GaussianPairSampler(rho, seed); }, stats,
                    n_samples, s, opt.workers);
            }
            double rho = cell.rho.to_double(), beta = cell.beta.to_double();
            return estimate_moments_parallel(
                [rho, beta](std::uint64_t seed) { return GammaPairSampler(beta, rho, seed); },
                stats, n_samples, s, opt.workers);
        };
        auto estimates = estimate_all(cell_seed);
        std::vector<MomentEstimate> retry_estimates;
        for (std::size_t j = 0; j < stats.size(); ++j) {
            Rational exact =
                stats[j].kind == Statistic::Kind::diff_power
                    ? (cell.w == Weight::normal
                           ? closed_moment_normal(stats[j].p, cell.rho)
                           : closed_moment_gamma(stats[j].p, cell.beta, cell.rho))
                    : mixed_moment_value(cell.w, stats[j].m, stats[j].l, cell.rho, cell.beta);
            MomentEstimate est = estimates[j];
            double z = z_compare(est, exact);
            bool retried = false;
            if (std::abs(z) > 5.0) {  // one reseeded retry per cell/statistic
                retried = true;
                if (retry_estimates.empty()) retry_estimates = estimate_all(mix64(cell_seed));
                est = retry_estimates[j];
                z = z_compare(est, exact);
            }
            McRow row;
            row.case_name = cell.w == Weight::normal ? "normal" : "gamma";
            row.statistic = stats[j].label();
            row.rho = cell.rho.to_string();
            row.beta = cell.w == Weight::gamma ? cell.beta.to_string() : "";
            row.est = est;
            row.exact = exact.to_double();
            row.z = z;
            row.retried = retried;
            row.pass = std::abs(z) <= 5.0;
            rows.push_back(std::move(row));
        }
    }

    OrderedJson config;
    config["case"] = mc.which_case;
    config["samples"] = n_samples;
    config["seed"] = mc.seed;
    config["workers"] = opt.workers;
    config["format"] = opt.format;

    std::string text;
    if (opt.format == "json") text = mc_report_json(rows, config, !opt.no_timestamp).dump(2);
    else if (opt.format == "markdown") text = mc_report_markdown(rows);
    else text = mc_report_csv(rows);
    write_output(text, opt.output);

    std::size_t failed = 0;
    for (const auto& r : rows)
        if (!r.pass) ++failed;
    std::cerr << "mc-check: " << rows.size() - failed << "/" << rows.size() << " cells pass\n";
    return failed == 0 ? 0 : 1;
}

// ---- bench --------------------------------------------------------------------

int run_bench(const CommonOpts& opt) {
    check_format(opt.format);
    Registry reg = Registry::standard();
    std::vector<std::string> ids =
        opt.ids.empty() ? std::vector<std::string>{"THM1.i", "THM1.ii", "THM1.iii", "THM1.iv",
                                                   "THM1.v"}
                        : opt.ids;
    for (const auto& id : ids) reg.at(id);

    std::vector<BenchRow> rows;
    for (const auto& id : ids) {
        const auto& desc = reg.at(id);
        bool uses_k = false;
        for (const auto& p : desc.params) uses_k |= (p.name == "k");
        long long cap = uses_k ? (opt.k_max >= 0 ? opt.k_max : 60)
                               : (opt.n_max >= 0 ? opt.n_max : 40);
        std::vector<long long> sizes = uses_k ? std::vector<long long>{10, 20, 40, 60}
                                              : std::vector<long long>{10, 20, 40};
        for (long long s : sizes) {
            if (s > cap) continue;
            Params params;
            for (const auto& p : desc.params) params[p.name] = std::min(s, p.hard_hi);
            if (desc.cell_filter && !desc.cell_filter(params)) continue;
            auto r = verify(desc, params);
            rows.push_back({id, params_to_string(params), 1, 1, r.elapsed_ms});
        }
        // Grid scaling: the same grid at one worker and at the requested count.
        RangeOverrides over = make_overrides(opt);
        std::vector<int> worker_counts{1};
        if (opt.workers > 1) worker_counts.push_back(opt.workers);
        for (int w : worker_counts) {
            auto t0 = std::chrono::steady_clock::now();
            auto results = verify_grid(reg, {id}, over, w);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            rows.push_back({id, "grid", results.size(), w, ms});
        }
    }

    OrderedJson config;
    config["ids"] = ids;
    config["workers"] = opt.workers;
    if (opt.k_max >= 0) config["k_max"] = opt.k_max;
    if (opt.n_max >= 0) config["n_max"] = opt.n_max;

    std::string text;
    if (opt.format == "json") text = bench_report_json(rows, config, !opt.no_timestamp).dump(2);
    else if (opt.format == "markdown") text = bench_report_markdown(rows);
    else text = bench_report_csv(rows);
    write_output(text, opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of binomial / double-factorial / rising-factorial "
                 "identities, with Monte Carlo cross-checks"};
    app.require_subcommand(1);

    CommonOpts opt;
    McOpts mc;

    auto add_common = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--id", opt.ids, "identity id (repeatable)");
        sub->add_option("--workers", opt.workers,
                        "worker threads (default: IDFORGE_WORKERS or hardware)");
        sub->add_option("--format", opt.format, "output format: json|markdown|csv")
            ->default_val(default_format);
        sub->add_option("--output", opt.output, "write the report to this file");
        sub->add_flag("--no-timestamp", opt.no_timestamp,
                      "omit the timestamp field (byte-reproducible output)");
    };

    bool with_negative_control = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run exact verification grids");
    add_common(verify_cmd, "json");
    verify_cmd->add_flag("--all", opt.all, "verify every registered identity");
    verify_cmd->add_option("--k-max", opt.k_max, "upper bound for parameters named k");
    verify_cmd->add_option("--n-max", opt.n_max, "upper bound for parameters named n");
    verify_cmd->add_option("--m-range", opt.m_range, "range lo..hi for parameters named m");
    verify_cmd->add_flag("--negative-control", with_negative_control,
                         "include the deliberately broken fixture X-NEGCTRL");

    CLI::App* list_cmd = app.add_subcommand("list", "print the identity registry");
    add_common(list_cmd, "markdown");

    CLI::App* mc_cmd = app.add_subcommand("mc-check", "Monte Carlo cross-validation");
    add_common(mc_cmd, "markdown");
    mc_cmd->add_option("--samples", mc.samples, "samples per cell (default 1e6)");
    mc_cmd->add_option("--seed", mc.seed, "base RNG seed");
    mc_cmd->add_option("--case", mc.which_case, "normal|gamma|all");
    mc_cmd->add_option("--rho", mc.rho, "correlation values (exact literals, repeatable)");
    mc_cmd->add_option("--beta", mc.beta, "gamma shape values (exact literals, repeatable)");

    CLI::App* bench_cmd = app.add_subcommand("bench", "time the exact engine");
    add_common(bench_cmd, "markdown");
    bench_cmd->add_option("--k-max", opt.k_max, "largest k size point");
    bench_cmd->add_option("--n-max", opt.n_max, "largest n size point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(opt, with_negative_control);
        if (list_cmd->parsed()) return run_list(opt);
        if (mc_cmd->parsed()) return run_mc_check(opt, mc);
        if (bench_cmd->parsed()) return run_bench(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
