#include "hookbound/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "hookbound/cell_typing.hpp"
#include "hookbound/degree.hpp"
#include "hookbound/enumerate.hpp"
#include "hookbound/errors.hpp"
#include "hookbound/reduction.hpp"
#include "hookbound/special_bounds.hpp"
#include "hookbound/strip.hpp"
#include "hookbound/sweep.hpp"
#include "hookbound/theorem.hpp"

namespace hookbound {

namespace {

std::string format_log(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

Rational required_rational(const std::optional<std::string>& text, const char* flag) {
    if (!text) throw ParseError(std::string("missing required flag ") + flag);
    return Rational::parse(*text);
}

int required_int(const std::optional<int>& value, const char* flag) {
    if (!value) throw ParseError(std::string("missing required flag ") + flag);
    return *value;
}

// Emits to --out when given, else to the output stream.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw DomainError("cannot open '" + out_path + "' for writing");
    file << text;
}

int verdict_exit(Verdict v) { return v == Verdict::Pass ? exit_code::kPass : exit_code::kFail; }

struct CertifyArgs {
    std::string bound;
    std::string partition;
    std::optional<std::string> alpha, beta, eps, gamma;
    std::optional<int> k, l, a, b;
    std::string out_path;
};

int cmd_degree(const std::string& text, std::ostream& out) {
    const Partition lambda = Partition::parse(text);
    out << degree(lambda).get_str() << "\n";
    out << format_log(lambda.empty() ? 0.0 : log_degree(lambda)) << "\n";
    return exit_code::kPass;
}

int cmd_certify(const CertifyArgs& args, std::ostream& out) {
    const auto partition = [&] { return Partition::parse(args.partition); };
    std::string text;
    Verdict verdict = Verdict::Pass;
    if (args.bound == "strip") {
        const StripCertificate strip = strip_bound(partition(), required_int(args.k, "--k"),
                                                   required_int(args.l, "--l"),
                                                   required_rational(args.alpha, "--alpha"));
        text = to_json(strip).dump(2);
        verdict = overall_verdict(strip.certificate);
    } else if (args.bound == "reduce") {
        const ReductionTrace trace = reduce(partition(), required_rational(args.alpha, "--alpha"));
        text = to_json(trace).dump(2);
    } else {
        BoundCertificate cert;
        if (args.bound == "rectangle") {
            cert = rectangle_bound(required_int(args.a, "--a"), required_int(args.b, "--b"));
        } else if (args.bound == "overexponential" || args.bound == "overexp") {
            cert = overexponential_bound(partition(), required_rational(args.eps, "--eps"),
                                         required_rational(args.gamma, "--gamma"));
        } else if (args.bound == "strict") {
            cert = strict_bound(partition(), required_rational(args.alpha, "--alpha"));
        } else if (args.bound == "general") {
            cert = general_bound(partition(), required_rational(args.alpha, "--alpha"));
        } else if (args.bound == "theorem") {
            cert = theorem_classify(partition(), required_rational(args.alpha, "--alpha"),
                                    required_rational(args.beta, "--beta"));
        } else {
            throw ParseError("unknown bound '" + args.bound +
                             "' (expected strip, rectangle, overexponential, strict, general, theorem, reduce)");
        }
        text = to_json(cert).dump(2);
        verdict = overall_verdict(cert);
    }
    emit(text + "\n", args.out_path, out);
    return verdict_exit(verdict);
}

int cmd_typing(const std::string& text, const std::string& alpha_text, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    const CellTyping typing = cell_typing(Partition::parse(text), Rational::parse(alpha_text));
    std::string rendered;
    if (format == "json") {
        rendered = to_json(typing).dump(2) + "\n";
    } else {
        std::vector<std::string> grid;
        for (int len : typing.shape.parts()) grid.emplace_back(static_cast<std::size_t>(len), '?');
        for (const auto& tc : typing.cells) {
            grid[static_cast<std::size_t>(tc.cell.row - 1)][static_cast<std::size_t>(tc.cell.col - 1)] =
                static_cast<char>('0' + tc.type);
        }
        for (const auto& row : grid) rendered += row + "\n";
    }
    emit(rendered, out_path, out);
    return exit_code::kPass;
}

int cmd_sweep(const SweepOptions& options, const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    const GrowthReport report = run_sweep(options);
    emit(format == "json" ? to_json(report).dump(2) + "\n" : to_csv(report), out_path, out);
    err << "n0: " << (report.n0 ? std::to_string(*report.n0) : std::string("not reached")) << "\n";
    return exit_code::kPass;
}

int cmd_oracle(int max_n, std::ostream& out) {
    if (max_n > kMaxSumSquaresN) {
        throw GuardError("oracle suites are limited to --max-n <= " + std::to_string(kMaxSumSquaresN));
    }
    bool all = true;
    auto report = [&](const char* name, bool ok, long checked) {
        out << name << ": " << (ok ? "PASS" : "FAIL") << " (" << checked << " checked)\n";
        all = all && ok;
    };

    bool ok = true;
    long checked = 0;
    for (int n = 1; n <= max_n; ++n, ++checked) ok = ok && sum_squares_identity(n);
    report("sum-of-squares", ok, checked);

    ok = true;
    checked = 0;
    for (int n = 0; n <= std::min(max_n, 8); ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            ok = ok && degree(lambda) == count_syt_bruteforce(lambda);
            ++checked;
        }
    }
    report("syt-count", ok, checked);

    ok = true;
    checked = 0;
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            ok = ok && degree(lambda) == degree(conjugate(lambda));
            ++checked;
        }
    }
    report("conjugation", ok, checked);

    ok = true;
    checked = 0;
    for (int n = 0; n <= std::min(max_n, 7); ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            ok = ok && verify_remark_n_ge_h(lambda);
            ++checked;
        }
    }
    report("remark-N-ge-h", ok, checked);
    return all ? exit_code::kPass : exit_code::kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact character degrees of symmetric groups and certified exponential lower bounds",
                 "hookbound"};
    app.require_subcommand(1);

    std::string partition_text;
    auto* degree_cmd = app.add_subcommand("degree", "Print f^lambda and ln f^lambda");
    degree_cmd->add_option("partition", partition_text, "Comma-separated parts")->required();

    CertifyArgs certify;
    auto* certify_cmd = app.add_subcommand("certify", "Certify a named bound and print its JSON certificate");
    certify_cmd->add_option("bound", certify.bound,
                            "strip | rectangle | overexponential | strict | general | theorem | reduce")
        ->required();
    certify_cmd->add_option("partition", certify.partition, "Comma-separated parts");
    certify_cmd->add_option("--alpha", certify.alpha, "alpha as p/q");
    certify_cmd->add_option("--beta", certify.beta, "beta as p/q");
    certify_cmd->add_option("--eps", certify.eps, "eps as p/q");
    certify_cmd->add_option("--gamma", certify.gamma, "gamma as p/q");
    certify_cmd->add_option("--k", certify.k, "hook rows");
    certify_cmd->add_option("--l", certify.l, "hook columns");
    certify_cmd->add_option("--a", certify.a, "rectangle rows");
    certify_cmd->add_option("--b", certify.b, "rectangle columns");
    certify_cmd->add_option("--out", certify.out_path, "Write to a file instead of standard output");

    std::string typing_alpha;
    std::string typing_format = "grid";
    std::string typing_out;
    auto* typing_cmd = app.add_subcommand("typing", "Dump the four-type cell numbering");
    typing_cmd->add_option("partition", partition_text, "Comma-separated parts")->required();
    typing_cmd->add_option("--alpha", typing_alpha, "alpha as p/q")->required();
    typing_cmd->add_option("--format", typing_format, "grid | json")
        ->check(CLI::IsMember({"grid", "json"}));
    typing_cmd->add_option("--out", typing_out, "Write to a file instead of standard output");

    SweepOptions sweep;
    std::string family_name;
    std::string sweep_alpha = "2";
    std::string sweep_beta = "3/2";
    std::string sweep_format = "csv";
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "Certify the theorem over a family of partitions");
    sweep_cmd->add_option("family", family_name, "balanced | staircase | enumerate | sample")
        ->required()
        ->check(CLI::IsMember({"balanced", "staircase", "enumerate", "sample"}));
    sweep_cmd->add_option("--alpha", sweep_alpha, "alpha as p/q");
    sweep_cmd->add_option("--beta", sweep_beta, "beta as p/q");
    sweep_cmd->add_option("--n-from", sweep.n_from, "First n")->required();
    sweep_cmd->add_option("--n-to", sweep.n_to, "Last n")->required();
    sweep_cmd->add_option("--samples", sweep.samples, "Samples per n (sample family)");
    sweep_cmd->add_option("--seed", sweep.seed, "Random seed (sample family)");
    sweep_cmd->add_option("--enum-cap", sweep.enumerate_cap, "Largest n for the enumerate family");
    sweep_cmd->add_option("--format", sweep_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_out, "Write to a file instead of standard output");

    int max_n = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run the classical identity and brute-force oracles");
    oracle_cmd->add_option("--max-n", max_n, "Largest n checked")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kPass : exit_code::kUsage;
    }

    try {
        if (degree_cmd->parsed()) return cmd_degree(partition_text, out);
        if (certify_cmd->parsed()) return cmd_certify(certify, out);
        if (typing_cmd->parsed()) return cmd_typing(partition_text, typing_alpha, typing_format, typing_out, out);
        if (sweep_cmd->parsed()) {
            sweep.family = parse_family(family_name);
            sweep.alpha = Rational::parse(sweep_alpha);
            sweep.beta = Rational::parse(sweep_beta);
            return cmd_sweep(sweep, sweep_format, sweep_out, out, err);
        }
        if (oracle_cmd->parsed()) return cmd_oracle(max_n, out);
    } catch (const HypothesisError& e) {
        err << "hypothesis: " << e.what() << "\n";
        return exit_code::kHypothesis;
    } catch (const ConsistencyError& e) {
        err << "internal consistency: " << e.what() << "\n";
        return exit_code::kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kUsage;
    }
    return exit_code::kUsage;
}

}  // namespace hookbound
