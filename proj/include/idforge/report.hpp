/**
 * @file report.hpp
 * @brief Machine-readable reports for the command-line front end.
 *
 * JSON schema (version 1):
 *   { "version", "command", "config", "results": [...], "summary",
 *     "timestamp"? }
 * where a verify result row is
 *   { "id", "params", "status", "empirical"?, "witness"?, "elapsed_ms",
 *     "paper_ref" }.
 * The timestamp is the only nondeterministic field and can be suppressed,
 * making reports byte-reproducible for a fixed config and seed.
 */
#ifndef IDFORGE_REPORT_HPP
#define IDFORGE_REPORT_HPP

#include <chrono>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

#include "json.hpp"

#include "idforge/registry.hpp"
#include "idforge/stochastic.hpp"

namespace idforge {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

inline std::string iso_timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline std::string params_to_string(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ", ";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

// ---- verify ---------------------------------------------------------------

struct VerifySummary {
    std::size_t cells = 0, passed = 0, failed = 0, empirical = 0;
    std::size_t families = 0;
    double elapsed_ms = 0.0;
};

inline VerifySummary summarize(const std::vector<VerificationResult>& results) {
    VerifySummary s;
    std::string last_id;
    for (const auto& r : results) {
        ++s.cells;
        if (r.pass) ++s.passed;
        else ++s.failed;
        if (r.empirical) ++s.empirical;
        s.elapsed_ms += r.elapsed_ms;
        if (r.id != last_id) {
            ++s.families;
            last_id = r.id;
        }
    }
    return s;
}

inline OrderedJson verify_report_json(const Registry& reg,
                                      const std::vector<VerificationResult>& results,
                                      const OrderedJson& config, bool with_timestamp) {
    OrderedJson doc;
    doc["version"] = kReportVersion;
    doc["command"] = "verify";
    doc["config"] = config;
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : results) {
        OrderedJson row;
        row["id"] = r.id;
        OrderedJson params;
        for (const auto& [k, v] : r.params) params[k] = v;
        row["params"] = params;
        row["status"] = r.pass ? "pass" : "fail";
        if (r.empirical) row["empirical"] = true;
        if (!r.pass) row["witness"] = r.witness;
        row["elapsed_ms"] = r.elapsed_ms;
        row["paper_ref"] = reg.at(r.id).paper_ref;
        rows.push_back(std::move(row));
    }
    doc["results"] = std::move(rows);
    VerifySummary s = summarize(results);
    doc["summary"] = {{"cells", s.cells},         {"passed", s.passed},
                      {"failed", s.failed},       {"empirical", s.empirical},
                      {"families", s.families},   {"all_pass", s.failed == 0},
                      {"elapsed_ms", s.elapsed_ms}};
    if (with_timestamp) doc["timestamp"] = iso_timestamp_utc();
    return doc;
}

inline std::string verify_report_markdown(const Registry& reg,
                                          const std::vector<VerificationResult>& results) {
    // One row per identity family; failures are listed individually below.
    std::string out = "| id | cells | pass | fail | empirical | paper ref |\n"
                      "|----|-------|------|------|-----------|-----------|\n";
    std::string cur;
    std::size_t cells = 0, pass = 0, fail = 0, emp = 0;
    auto flush = [&] {
        if (cur.empty()) return;
        out += "| " + cur + " | " + std::to_string(cells) + " | " + std::to_string(pass) +
               " | " + std::to_string(fail) + " | " + std::to_string(emp) + " | " +
               reg.at(cur).paper_ref + " |\n";
    };
    for (const auto& r : results) {
        if (r.id != cur) {
            flush();
            cur = r.id;
            cells = pass = fail = emp = 0;
        }
        ++cells;
        r.pass ? ++pass : ++fail;
        if (r.empirical) ++emp;
    }
    flush();
    bool any_fail = false;
    for (const auto& r : results) {
        if (r.pass) continue;
        if (!any_fail) {
            out += "\nFailures:\n";
            any_fail = true;
        }
        out += "- " + r.id + " (" + params_to_string(r.params) + "): " + r.witness + "\n";
    }
    return out;
}

inline std::string verify_report_csv(const Registry& reg,
                                     const std::vector<VerificationResult>& results) {
    std::string out = "id,params,status,empirical,elapsed_ms,paper_ref,witness\n";
    for (const auto& r : results) {
        out += r.id + ",\"" + params_to_string(r.params) + "\"," + (r.pass ? "pass" : "fail") +
               "," + (r.empirical ? "yes" : "no") + "," + format_double(r.elapsed_ms) + ",\"" +
               reg.at(r.id).paper_ref + "\",\"" + r.witness + "\"\n";
    }
    return out;
}

// ---- list -----------------------------------------------------------------

inline OrderedJson list_report_json(const std::vector<const IdentityDescriptor*>& entries) {
    OrderedJson rows = OrderedJson::array();
    for (const auto* e : entries) {
        OrderedJson row;
        row["id"] = e->id;
        row["ring"] = e->ring;
        OrderedJson params = OrderedJson::array();
        for (const auto& p : e->params)
            params.push_back({{"name", p.name},
                              {"default_lo", p.lo},
                              {"default_hi", p.hi},
                              {"hard_lo", p.hard_lo},
                              {"hard_hi", p.hard_hi}});
        row["params"] = params;
        row["paper_ref"] = e->paper_ref;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string list_report_markdown(const std::vector<const IdentityDescriptor*>& entries) {
    std::string out = "| id | ring | params (default / hard bounds) | paper ref |\n"
                      "|----|------|--------------------------------|-----------|\n";
    for (const auto* e : entries) {
        std::string ps;
        for (const auto& p : e->params) {
            if (!ps.empty()) ps += "; ";
            ps += p.name + " in [" + std::to_string(p.lo) + "," + std::to_string(p.hi) +
                  "] / [" + std::to_string(p.hard_lo) + "," + std::to_string(p.hard_hi) + "]";
        }
        out += "| " + e->id + " | " + e->ring + " | " + ps + " | " + e->paper_ref + " |\n";
    }
    return out;
}

inline std::string list_report_csv(const std::vector<const IdentityDescriptor*>& entries) {
    std::string out = "id,ring,params,paper_ref\n";
    for (const auto* e : entries) {
        std::string ps;
        for (const auto& p : e->params) {
            if (!ps.empty()) ps += "; ";
            ps += p.name + " in [" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "]";
        }
        out += e->id + "," + e->ring + ",\"" + ps + "\",\"" + e->paper_ref + "\"\n";
    }
    return out;
}

// ---- mc-check ---------------------------------------------------------------

struct McRow {
    std::string case_name;  // "normal" or "gamma"
    std::string statistic;
    std::string rho, beta;  // exact parameter values as printed ("" when unused)
    MomentEstimate est;
    double exact = 0.0;
    double z = 0.0;
    bool retried = false;
    bool pass = false;
};

inline OrderedJson mc_report_json(const std::vector<McRow>& rows, const OrderedJson& config,
                                  bool with_timestamp) {
    OrderedJson doc;
    doc["version"] = kReportVersion;
    doc["command"] = "mc-check";
    doc["config"] = config;
    OrderedJson arr = OrderedJson::array();
    std::size_t failed = 0;
    for (const auto& r : rows) {
        OrderedJson row;
        row["case"] = r.case_name;
        row["statistic"] = r.statistic;
        row["rho"] = r.rho;
        if (!r.beta.empty()) row["beta"] = r.beta;
        row["samples"] = r.est.n_samples;
        row["estimate"] = r.est.mean;
        row["std_error"] = r.est.std_error;
        row["exact"] = r.exact;
        row["z"] = r.z;
        row["retried"] = r.retried;
        row["status"] = r.pass ? "pass" : "fail";
        if (!r.pass) ++failed;
        arr.push_back(std::move(row));
    }
    doc["results"] = std::move(arr);
    doc["summary"] = {{"cells", rows.size()},
                      {"failed", failed},
                      {"all_pass", failed == 0},
                      {"gate", "|z| <= 5 with one reseeded retry"}};
    if (with_timestamp) doc["timestamp"] = iso_timestamp_utc();
    return doc;
}

inline std::string mc_report_markdown(const std::vector<McRow>& rows) {
    std::string out =
        "| case | statistic | rho | beta | estimate | std error | exact | z | retried | status |\n"
        "|------|-----------|-----|------|----------|-----------|-------|---|---------|--------|\n";
    for (const auto& r : rows) {
        out += "| " + r.case_name + " | " + r.statistic + " | " + r.rho + " | " +
               (r.beta.empty() ? "-" : r.beta) + " | " + format_double(r.est.mean) + " | " +
               format_double(r.est.std_error) + " | " + format_double(r.exact) + " | " +
               format_double(r.z) + " | " + (r.retried ? "yes" : "no") + " | " +
               (r.pass ? "pass" : "fail") + " |\n";
    }
    return out;
}

inline std::string mc_report_csv(const std::vector<McRow>& rows) {
    std::string out = "case,statistic,rho,beta,samples,estimate,std_error,exact,z,retried,status\n";
    for (const auto& r : rows) {
        out += r.case_name + "," + r.statistic + "," + r.rho + "," + r.beta + "," +
               std::to_string(r.est.n_samples) + "," + format_double(r.est.mean) + "," +
               format_double(r.est.std_error) + "," + format_double(r.exact) + "," +
               format_double(r.z) + "," + (r.retried ? "yes" : "no") + "," +
               (r.pass ? "pass" : "fail") + "\n";
    }
    return out;
}

// ---- bench ------------------------------------------------------------------

struct BenchRow {
    std::string id;
    std::string params;
    std::size_t cells = 0;
    int workers = 1;
    double elapsed_ms = 0.0;
};

inline OrderedJson bench_report_json(const std::vector<BenchRow>& rows, const OrderedJson& config,
                                     bool with_timestamp) {
    OrderedJson doc;
    doc["version"] = kReportVersion;
    doc["command"] = "bench";
    doc["config"] = config;
    OrderedJson arr = OrderedJson::array();
    for (const auto& r : rows) {
        arr.push_back({{"id", r.id},
                       {"params", r.params},
                       {"cells", r.cells},
                       {"workers", r.workers},
                       {"elapsed_ms", r.elapsed_ms}});
    }
    doc["results"] = std::move(arr);
    if (with_timestamp) doc["timestamp"] = iso_timestamp_utc();
    return doc;
}

inline std::string bench_report_markdown(const std::vector<BenchRow>& rows) {
    std::string out = "| id | params | cells | workers | elapsed ms |\n"
                      "|----|--------|-------|---------|------------|\n";
    for (const auto& r : rows) {
        out += "| " + r.id + " | " + r.params + " | " + std::to_string(r.cells) + " | " +
               std::to_string(r.workers) + " | " + format_double(r.elapsed_ms) + " |\n";
    }
    return out;
}

inline std::string bench_report_csv(const std::vector<BenchRow>& rows) {
    std::string out = "id,params,cells,workers,elapsed_ms\n";
    for (const auto& r : rows) {
        out += r.id + ",\"" + r.params + "\"," + std::to_string(r.cells) + "," +
               std::to_string(r.workers) + "," + format_double(r.elapsed_ms) + "\n";
    }
    return out;
}

}  // namespace idforge

#endif
