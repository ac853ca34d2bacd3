#include "hookbound/theorem.hpp"

#include <cmath>

#include "hookbound/cell_typing.hpp"
#include "hookbound/degree.hpp"
#include "hookbound/errors.hpp"
#include "hookbound/reduction.hpp"
#include "hookbound/special_bounds.hpp"
#include "hookbound/strip.hpp"

namespace hookbound {

std::string to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::M1: return "M1";
        case GrowthClass::M2: return "M2";
        case GrowthClass::M3: return "M3";
    }
    return "M1";
}

double theorem_gamma(const Rational& alpha, const Rational& beta) {
    return (alpha.log() - beta.log()) / alpha.log();
}

GrowthClass classify(int n, int delta, const Rational& alpha, double gamma) {
    if (Rational(delta) < Rational(18) * alpha) return GrowthClass::M1;
    const double rhs = 2.5 * static_cast<double>(delta) * delta +
                       alpha.to_double() * static_cast<double>(rho(delta, alpha));
    const double lhs = gamma * n;
    return lhs <= rhs * (1.0 + kLogTolerance) ? GrowthClass::M2 : GrowthClass::M3;
}

double m2_epsilon(const Rational& alpha, double gamma) {
    const double a = alpha.to_double();
    if (alpha.is_integer()) return gamma / (2.5 + a);
    return gamma / (3.0 + a / alpha.fractional_part().to_double());
}

namespace {

// Largest dyadic rational p / 2^40 not exceeding x * (1 - 1e-12).
Rational rational_below(double x) {
    const double scaled = std::floor(x * (1.0 - 1e-12) * std::ldexp(1.0, 40));
    BigInt den = 1;
    den <<= 40;
    return Rational(BigInt(scaled), den);
}

}  // namespace

BoundCertificate theorem_classify(const Partition& lambda, const Rational& alpha, const Rational& beta) {
    const int n = lambda.size();
    if (beta <= Rational(1)) throw HypothesisError("beta > 1 fails: beta = " + beta.to_string());
    if (beta >= alpha) {
        throw HypothesisError("beta < alpha fails: beta = " + beta.to_string() + ", alpha = " +
                              alpha.to_string());
    }
    if (n < 1) throw HypothesisError("n >= 1 fails");
    const Rational cap = Rational(n) / alpha;
    if (Rational(lambda.part(1)) > cap) {
        throw HypothesisError("lambda_1 <= n/alpha fails: " + std::to_string(lambda.part(1)) + " > " +
                              cap.to_string());
    }
    if (Rational(lambda.column(1)) > cap) {
        throw HypothesisError("lambda'_1 <= n/alpha fails: " + std::to_string(lambda.column(1)) +
                              " > " + cap.to_string());
    }

    const double gamma = theorem_gamma(alpha, beta);
    const int delta = diagonal(lambda);
    const GrowthClass growth = classify(n, delta, alpha, gamma);
    const BigInt f = degree(lambda);

    BoundCertificate cert;
    cert.bound_name = "theorem";
    cert.add_parameter("alpha", alpha);
    cert.add_parameter("beta", beta);
    cert.add_parameter("gamma", gamma);
    cert.add_parameter("delta", static_cast<long>(delta));
    cert.add_parameter("n", static_cast<long>(n));
    cert.exponent = Rational(n);
    cert.set_comparison(compare_at_least(f, PowerBound{beta, Rational(n), 1}));
    cert.details["partition"] = lambda.to_string();
    cert.details["class"] = to_string(growth);

    BoundCertificate dispatched;
    switch (growth) {
        case GrowthClass::M1: {
            const int side = static_cast<int>((Rational(18) * alpha).floor().get_si()) +
                             ((Rational(18) * alpha).is_integer() ? 0 : 1);
            dispatched = strip_bound(lambda, side, side, alpha).certificate;
            break;
        }
        case GrowthClass::M2: {
            const Rational eps = rational_below(m2_epsilon(alpha, gamma));
            dispatched = overexponential_bound(lambda, eps, beta);
            break;
        }
        case GrowthClass::M3:
            dispatched = general_bound(lambda, alpha);
            break;
    }
    dispatched.required = false;
    cert.checks.push_back(std::move(dispatched));
    return cert;
}

}  // namespace hookbound
