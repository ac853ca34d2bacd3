#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hookbound/rational.hpp"

namespace hookbound {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Marginal };
enum class Mode { Exact, LogDomain };

std::string to_string(Verdict v);
std::string to_string(Mode m);
Verdict parse_verdict(const std::string& text);
Mode parse_mode(const std::string& text);

/// Relative width of the MARGINAL band in log-domain comparisons.
inline constexpr double kLogTolerance = 1e-9;
/// Default cap on operand size for exact comparisons, in bits.
inline constexpr long kDefaultExactBits = 1L << 20;

/// Bit budget for exact comparisons; HOOKBOUND_EXACT_BITS overrides the default.
long exact_bit_budget();

/// Right-hand side of a certificate: scale * base^exponent, all exact.
struct PowerBound {
    Rational base = 1;
    Rational exponent = 0;
    Rational scale = 1;

    double log() const;
};

/// Outcome of comparing an exact positive integer against a PowerBound.
struct Comparison {
    Mode mode = Mode::Exact;
    Verdict verdict = Verdict::Fail;
    double lhs_log = 0;
    double rhs_log = 0;
    double margin = 0;
};

/// Decides value >= bound. Exact when the cleared-denominator operands fit the
/// bit budget, otherwise in the log domain with the MARGINAL band.
Comparison compare_at_least(const BigInt& value, const PowerBound& bound,
                            long bit_budget = exact_bit_budget());

/// Log-domain verdict rule, shared with re-validation.
Verdict log_verdict(double lhs_log, double rhs_log);

/// A named lower bound instance, checked against an exact value.
struct BoundCertificate {
    std::string bound_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    Rational exponent = 0;
    double lhs_log = 0;
    double rhs_log = 0;
    double margin = 0;
    Mode mode = Mode::Exact;
    Verdict verdict = Verdict::Fail;
    /// Bound-specific fields (class, construction summaries, cell arrays).
    Json details = Json::object();
    /// Intermediate certificates along the proof chain.
    std::vector<BoundCertificate> checks;
    /// Whether this certificate is part of its parent's claim. Informational
    /// sub-bounds (e.g. the one dispatched by the theorem) are not.
    bool required = true;

    void set_comparison(const Comparison& c);
    void add_parameter(std::string name, const Rational& value);
    void add_parameter(std::string name, long value);
    void add_parameter(std::string name, double value);
    bool passed() const { return verdict == Verdict::Pass; }
};

/// Worst verdict over the certificate and its required checks.
Verdict overall_verdict(const BoundCertificate& cert);

/// Comparison record for a pair of precomputed logs (no exact operand).
Comparison log_comparison(double lhs_log, double rhs_log);

Json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const Json& j);

/// Re-reads a serialized certificate and checks that the stored margin and
/// verdict follow from lhs_log / rhs_log (recursively through "checks").
/// Returns an empty string on success, else a description of the mismatch.
std::string revalidate(const Json& j);

}  // namespace hookbound
