#include "hookbound/reduction.hpp"

#include "hookbound/cell_typing.hpp"
#include "hookbound/degree.hpp"
#include "hookbound/errors.hpp"

namespace hookbound {

namespace {

void require_consistent(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("reduction: " + what);
}

// Row lengths of the diagram made of the delta x delta square, the kept row
// arms (rows <= delta) and the kept column legs (columns <= delta).
Partition assemble(const std::vector<int>& rows, const std::vector<int>& cols, int delta) {
    std::vector<int> parts(rows);
    for (int i = delta + 1;; ++i) {
        int len = 0;
        for (int c : cols) len += c >= i ? 1 : 0;
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

int last_above(const std::vector<int>& lengths, int delta) {
    int last = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] > delta) last = static_cast<int>(i) + 1;
    }
    return last;
}

// First failing strict-row hypothesis of the cell typing, or "".
std::string strict_gate(const Partition& mu, const Rational& alpha) {
    try {
        (void)cell_typing(mu, alpha);
    } catch (const HypothesisError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

ReductionTrace reduce(const Partition& lambda, const Rational& alpha, ReduceMode mode) {
    const int n = lambda.size();
    const int delta = diagonal(lambda);
    if (mode == ReduceMode::Certify) {
        if (alpha <= Rational(1)) throw HypothesisError("alpha > 1 fails: alpha = " + alpha.to_string());
        if (Rational(delta) < Rational(18) * alpha) {
            throw HypothesisError("delta >= 18 alpha fails: delta = " + std::to_string(delta) + " < " +
                                  (Rational(18) * alpha).to_string());
        }
        const Rational cap = Rational(n) / alpha;
        if (Rational(lambda.part(1)) > cap) {
            throw HypothesisError("lambda_1 <= n/alpha fails: " + std::to_string(lambda.part(1)) +
                                  " > " + cap.to_string());
        }
        if (Rational(lambda.column(1)) > cap) {
            throw HypothesisError("lambda'_1 <= n/alpha fails: " + std::to_string(lambda.column(1)) +
                                  " > " + cap.to_string());
        }
    }
    if (n <= delta * delta) {
        throw HypothesisError("n > delta^2 fails: n = " + std::to_string(n) + ", delta = " +
                              std::to_string(delta));
    }

    ReductionTrace out;
    out.input = lambda;
    out.delta = delta;

    std::vector<int> rows(static_cast<std::size_t>(delta));
    std::vector<int> cols(static_cast<std::size_t>(delta));
    for (int i = 1; i <= delta; ++i) {
        const int len = lambda.part(i);
        rows[static_cast<std::size_t>(i - 1)] = len >= delta + i - 1 ? len - (i - 1) : delta;
        const int height = lambda.column(i);
        cols[static_cast<std::size_t>(i - 1)] = height >= delta + i - 1 ? height - (i - 1) : delta;
    }
    int s = last_above(rows, delta);
    int t = last_above(cols, delta);
    if (s < t) {
        std::swap(rows, cols);
        std::swap(s, t);
        out.conjugated = true;
    }
    out.tilde = assemble(rows, cols, delta);
    out.s = s;
    out.t = t;
    out.n1 = out.tilde.size();

    std::vector<int> mu_parts(out.tilde.parts().begin(), out.tilde.parts().end());
    if (s < delta) {
        for (int i = s + 2; i <= delta; ++i) mu_parts[static_cast<std::size_t>(i - 1)] = delta - (i - s - 1);
    }
    out.mu = Partition(std::move(mu_parts));
    out.n2 = out.mu.size();
    out.delta_mu = diagonal(out.mu);
    out.rho_mu = alpha > Rational(1) ? rho(out.delta_mu, alpha) : 0;

    const Partition& base = out.conjugated ? conjugate(lambda) : lambda;
    require_consistent(conjugate(out.tilde) == assemble(cols, rows, delta), "column rule not realized");
    require_consistent(s >= 1, "s >= 1 fails although n > delta^2");
    require_consistent(out.n1 >= n - delta * delta + delta, "n1 >= n - delta^2 + delta fails");
    const int expected_n2 = s < delta ? out.n1 - (delta - s - 1) * (delta - s) / 2 : out.n1;
    require_consistent(out.n2 == expected_n2, "n2 formula fails");
    require_consistent(out.delta_mu >= delta / 2 + 1, "delta(mu) >= [delta/2] + 1 fails");
    require_consistent(contains(out.tilde, base), "tilde is not contained in lambda");
    require_consistent(contains(out.mu, base), "mu is not contained in lambda");
    if (alpha > Rational(1)) out.mu_gate = strict_gate(out.mu, alpha);
    return out;
}

BoundCertificate general_bound(const Partition& lambda, const Rational& alpha) {
    const ReductionTrace trace = reduce(lambda, alpha);
    const int n = lambda.size();
    const long rho_lambda = rho(trace.delta, alpha);
    const BigInt f = degree(lambda);
    const BigInt f_mu = degree(trace.mu);

    BoundCertificate cert;
    cert.bound_name = "general";
    cert.add_parameter("alpha", alpha);
    cert.add_parameter("delta", static_cast<long>(trace.delta));
    cert.add_parameter("rho", rho_lambda);
    cert.add_parameter("n", static_cast<long>(n));
    cert.exponent = Rational(n) - (Rational(5, 2) * Rational(static_cast<long>(trace.delta) * trace.delta) +
                                   alpha * Rational(rho_lambda));
    cert.set_comparison(compare_at_least(f, PowerBound{alpha, cert.exponent, 1}));
    cert.details["partition"] = lambda.to_string();
    cert.details["reduction"] = to_json(trace);

    BoundCertificate containment;
    containment.bound_name = "containment";
    containment.set_comparison(compare_at_least(f, PowerBound{1, 0, Rational(f_mu, 1)}));
    cert.checks.push_back(std::move(containment));

    if (trace.mu_gate.empty()) {
        BoundCertificate on_mu = strict_bound(trace.mu, alpha);
        BoundCertificate lifted;
        lifted.bound_name = "general-lifted";
        lifted.exponent = on_mu.exponent;
        lifted.set_comparison(compare_at_least(f, PowerBound{alpha, lifted.exponent, 1}));
        if (lifted.exponent < cert.exponent) {
            throw ConsistencyError("reduction: exponent on mu is below the general exponent");
        }
        cert.checks.push_back(std::move(on_mu));
        cert.checks.push_back(std::move(lifted));
    }
    return cert;
}

Json to_json(const ReductionTrace& trace) {
    Json j;
    j["input"] = trace.input.to_string();
    j["delta"] = trace.delta;
    j["tilde"] = trace.tilde.to_string();
    j["s"] = trace.s;
    j["t"] = trace.t;
    j["conjugated"] = trace.conjugated;
    j["mu"] = trace.mu.to_string();
    j["n1"] = trace.n1;
    j["n2"] = trace.n2;
    j["delta_mu"] = trace.delta_mu;
    j["rho_mu"] = trace.rho_mu;
    j["mu_gate"] = trace.mu_gate;
    return j;
}

}  // namespace hookbound
