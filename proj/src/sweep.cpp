#include "hookbound/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "hookbound/degree.hpp"
#include "hookbound/enumerate.hpp"
#include "hookbound/errors.hpp"
#include "hookbound/families.hpp"
#include "hookbound/theorem.hpp"

namespace hookbound {

Family parse_family(const std::string& name) {
    if (name == "balanced") return Family::Balanced;
    if (name == "staircase") return Family::Staircase;
    if (name == "enumerate") return Family::Enumerate;
    if (name == "sample") return Family::Sample;
    throw ParseError("unknown family '" + name + "'");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Balanced: return "balanced";
        case Family::Staircase: return "staircase";
        case Family::Enumerate: return "enumerate";
        case Family::Sample: return "sample";
    }
    return "balanced";
}

namespace {

GrowthRow certify_row(const Partition& lambda, const Rational& alpha, const Rational& beta) {
    GrowthRow row;
    row.n = lambda.size();
    row.partition = lambda.to_string();
    row.delta = diagonal(lambda);
    row.log_beta = beta.log();
    row.log_f_per_n = log_degree(lambda) / row.n;
    row.margin = row.log_f_per_n * row.n - row.n * row.log_beta;
    try {
        const BoundCertificate cert = theorem_classify(lambda, alpha, beta);
        row.growth_class = cert.details.at("class").get<std::string>();
        row.verdict = to_string(cert.verdict);
        row.margin = cert.margin;
        row.bound_log_per_n = cert.checks.front().rhs_log / row.n;
    } catch (const HypothesisError&) {
        row.growth_class = "-";
        row.verdict = "HYPOTHESIS";
        row.bound_log_per_n = std::numeric_limits<double>::quiet_NaN();
    }
    return row;
}

std::string format_log(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace

std::optional<int> empirical_n0(const std::vector<GrowthRow>& rows) {
    if (rows.empty()) return std::nullopt;
    std::optional<int> last_bad;
    for (const auto& row : rows) {
        if (row.verdict != "PASS") last_bad = row.n;
    }
    if (!last_bad) return rows.front().n;
    for (const auto& row : rows) {
        if (row.n > *last_bad) return row.n;
    }
    return std::nullopt;
}

GrowthReport run_sweep(const SweepOptions& options) {
    if (options.n_from < 1 || options.n_to < options.n_from) throw DomainError("empty or invalid n range");
    if (options.family == Family::Enumerate && options.n_to > options.enumerate_cap) {
        throw DomainError("enumerate is limited to n <= " + std::to_string(options.enumerate_cap) +
                          "; use the sample family for larger n");
    }
    GrowthReport report;
    report.family = to_string(options.family);
    report.alpha = options.alpha;
    report.beta = options.beta;
    SampleRng rng(options.seed);
    for (int n = options.n_from; n <= options.n_to; ++n) {
        std::vector<Partition> members;
        const int cap = floor_div(n, options.alpha);
        switch (options.family) {
            case Family::Balanced:
                members.push_back(balanced_partition(n));
                break;
            case Family::Staircase:
                if (auto p = staircase_partition(n, options.alpha)) members.push_back(*p);
                break;
            case Family::Enumerate:
                members = enumerate_partitions(n, {cap, cap});
                break;
            case Family::Sample: {
                const BoxCounts counts(n, cap, cap);
                if (counts.total() == 0) break;
                for (int i = 0; i < options.samples; ++i) members.push_back(sample_partition(counts, rng));
                break;
            }
        }
        for (const auto& lambda : members) {
            report.rows.push_back(certify_row(lambda, options.alpha, options.beta));
        }
    }
    report.n0 = empirical_n0(report.rows);
    return report;
}

std::string to_csv(const GrowthReport& report) {
    std::string out = "n,partition,delta,class,log_f_per_n,log_beta,bound_log_per_n,verdict,margin\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.n) + ",\"" + row.partition + "\"," + std::to_string(row.delta) + "," +
               row.growth_class + "," + format_log(row.log_f_per_n) + "," + format_log(row.log_beta) + "," +
               format_log(row.bound_log_per_n) + "," + row.verdict + "," + format_log(row.margin) + "\n";
    }
    return out;
}

Json to_json(const GrowthReport& report) {
    Json j;
    j["family"] = report.family;
    j["alpha"] = report.alpha.to_string();
    j["beta"] = report.beta.to_string();
    if (report.n0) {
        j["n0"] = *report.n0;
    } else {
        j["n0"] = "not reached";
    }
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["n"] = row.n;
        r["partition"] = row.partition;
        r["delta"] = row.delta;
        r["class"] = row.growth_class;
        r["log_f_per_n"] = row.log_f_per_n;
        r["log_beta"] = row.log_beta;
        if (std::isnan(row.bound_log_per_n)) {
            r["bound_log_per_n"] = nullptr;
        } else {
            r["bound_log_per_n"] = row.bound_log_per_n;
        }
        r["verdict"] = row.verdict;
        r["margin"] = row.margin;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace hookbound
