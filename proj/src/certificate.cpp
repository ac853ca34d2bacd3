#include "hookbound/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hookbound/errors.hpp"

namespace hookbound {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Marginal: return "MARGINAL";
    }
    return "FAIL";
}

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "log-domain"; }

Verdict parse_verdict(const std::string& text) {
    if (text == "PASS") return Verdict::Pass;
    if (text == "FAIL") return Verdict::Fail;
    if (text == "MARGINAL") return Verdict::Marginal;
    throw ParseError("unknown verdict '" + text + "'");
}

Mode parse_mode(const std::string& text) {
    if (text == "exact") return Mode::Exact;
    if (text == "log-domain") return Mode::LogDomain;
    throw ParseError("unknown mode '" + text + "'");
}

long exact_bit_budget() {
    if (const char* env = std::getenv("HOOKBOUND_EXACT_BITS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value >= 0) return value;
    }
    return kDefaultExactBits;
}

double PowerBound::log() const {
    return scale.log() + exponent.to_double() * base.log();
}

Verdict log_verdict(double lhs_log, double rhs_log) {
    const double margin = lhs_log - rhs_log;
    const double band = kLogTolerance * std::max(std::abs(lhs_log), std::abs(rhs_log));
    if (std::abs(margin) <= band) return Verdict::Marginal;
    return margin > 0 ? Verdict::Pass : Verdict::Fail;
}

namespace {

long bits(const BigInt& v) {
    return v == 0 ? 1 : static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

BigInt power(const BigInt& base, const BigInt& exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return out;
}

}  // namespace

Comparison compare_at_least(const BigInt& value, const PowerBound& bound, long bit_budget) {
    if (value <= 0) throw DomainError("compare_at_least needs a positive value");
    if (bound.base <= Rational(0) || bound.scale <= Rational(0)) {
        throw DomainError("bound base and scale must be positive");
    }
    Comparison out;
    out.lhs_log = log_big(value);
    out.rhs_log = bound.log();
    out.margin = out.lhs_log - out.rhs_log;

    // value >= scale * (p/q)^(u/v)  <=>  value^v * sd^v * q^u >= sn^v * p^u   (u >= 0)
    BigInt u = bound.exponent.numerator();
    const BigInt v = bound.exponent.denominator();
    BigInt p = bound.base.numerator();
    BigInt q = bound.base.denominator();
    if (u < 0) {
        u = -u;
        std::swap(p, q);
    }
    const BigInt sn = bound.scale.numerator();
    const BigInt sd = bound.scale.denominator();

    const bool small = u.fits_ulong_p() && v.fits_ulong_p() && v.get_ui() < (1UL << 20);
    const double estimate =
        small ? v.get_d() * static_cast<double>(bits(value) + std::max(bits(sd), bits(sn))) +
                    u.get_d() * static_cast<double>(std::max(bits(p), bits(q)))
              : 1e300;
    if (estimate <= static_cast<double>(bit_budget)) {
        const BigInt lhs = power(value, v) * power(sd, v) * power(q, u);
        const BigInt rhs = power(sn, v) * power(p, u);
        out.mode = Mode::Exact;
        out.verdict = lhs >= rhs ? Verdict::Pass : Verdict::Fail;
    } else {
        out.mode = Mode::LogDomain;
        out.verdict = log_verdict(out.lhs_log, out.rhs_log);
    }
    return out;
}

Comparison log_comparison(double lhs_log, double rhs_log) {
    return Comparison{Mode::LogDomain, log_verdict(lhs_log, rhs_log), lhs_log, rhs_log,
                      lhs_log - rhs_log};
}

Verdict overall_verdict(const BoundCertificate& cert) {
    Verdict worst = cert.verdict;
    for (const auto& c : cert.checks) {
        if (!c.required) continue;
        const Verdict v = overall_verdict(c);
        if (v == Verdict::Fail || (v == Verdict::Marginal && worst == Verdict::Pass)) worst = v;
    }
    return worst;
}

void BoundCertificate::set_comparison(const Comparison& c) {
    lhs_log = c.lhs_log;
    rhs_log = c.rhs_log;
    margin = c.margin;
    mode = c.mode;
    verdict = c.verdict;
}

void BoundCertificate::add_parameter(std::string name, const Rational& value) {
    parameters.emplace_back(std::move(name), value.to_string());
}

void BoundCertificate::add_parameter(std::string name, long value) {
    parameters.emplace_back(std::move(name), std::to_string(value));
}

void BoundCertificate::add_parameter(std::string name, double value) {
    Json j = value;
    parameters.emplace_back(std::move(name), j.dump());
}

Json to_json(const BoundCertificate& cert) {
    Json j;
    j["bound_name"] = cert.bound_name;
    Json params = Json::object();
    for (const auto& [name, value] : cert.parameters) params[name] = value;
    j["parameters"] = params;
    j["exponent"] = cert.exponent.to_string();
    j["lhs_log"] = cert.lhs_log;
    j["rhs_log"] = cert.rhs_log;
    j["margin"] = cert.margin;
    j["mode"] = to_string(cert.mode);
    j["verdict"] = to_string(cert.verdict);
    if (!cert.required) j["required"] = false;
    for (const auto& [key, value] : cert.details.items()) j[key] = value;
    if (!cert.checks.empty()) {
        Json checks = Json::array();
        for (const auto& c : cert.checks) checks.push_back(to_json(c));
        j["checks"] = checks;
    }
    return j;
}

BoundCertificate certificate_from_json(const Json& j) {
    static const std::vector<std::string> kCore = {"bound_name", "parameters", "exponent",
                                                   "lhs_log",    "rhs_log",    "margin",
                                                   "mode",       "verdict",    "checks",
                                                   "required"};
    BoundCertificate cert;
    try {
        cert.bound_name = j.at("bound_name").get<std::string>();
        for (const auto& [name, value] : j.at("parameters").items()) {
            cert.parameters.emplace_back(name, value.get<std::string>());
        }
        cert.exponent = Rational::parse(j.at("exponent").get<std::string>());
        cert.lhs_log = j.at("lhs_log").get<double>();
        cert.rhs_log = j.at("rhs_log").get<double>();
        cert.margin = j.at("margin").get<double>();
        cert.mode = parse_mode(j.at("mode").get<std::string>());
        cert.verdict = parse_verdict(j.at("verdict").get<std::string>());
        cert.required = j.value("required", true);
        for (const auto& [key, value] : j.items()) {
            if (std::find(kCore.begin(), kCore.end(), key) == kCore.end()) cert.details[key] = value;
        }
        if (j.contains("checks")) {
            for (const auto& c : j.at("checks")) cert.checks.push_back(certificate_from_json(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

std::string revalidate(const Json& j) {
    const BoundCertificate cert = certificate_from_json(j);
    const double margin = cert.lhs_log - cert.rhs_log;
    const double band = kLogTolerance * std::max(std::abs(cert.lhs_log), std::abs(cert.rhs_log));
    const std::string where = cert.bound_name + ": ";
    if (std::abs(margin - cert.margin) > 1e-12 * std::max(1.0, std::abs(margin))) {
        return where + "stored margin does not equal lhs_log - rhs_log";
    }
    if (cert.mode == Mode::LogDomain) {
        if (log_verdict(cert.lhs_log, cert.rhs_log) != cert.verdict) {
            return where + "log-domain verdict does not follow from the margin";
        }
    } else {
        // an exact verdict may only disagree with the sign inside the tolerance band
        if (cert.verdict == Verdict::Marginal) return where + "exact mode cannot be MARGINAL";
        if (cert.verdict == Verdict::Pass && margin < -band) return where + "PASS with negative margin";
        if (cert.verdict == Verdict::Fail && margin > band) return where + "FAIL with positive margin";
    }
    if (j.contains("checks")) {
        for (const auto& c : j.at("checks")) {
            if (auto err = revalidate(c); !err.empty()) return err;
        }
    }
    return {};
}

}  // namespace hookbound
