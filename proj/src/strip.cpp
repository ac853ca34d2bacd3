#include "hookbound/strip.hpp"

#include "hookbound/degree.hpp"
#include "hookbound/errors.hpp"

namespace hookbound {

namespace {

void require_consistent(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("strip bound construction: " + what);
}

Json cells_json(const std::vector<Cell>& cells) {
    Json out = Json::array();
    for (const auto& c : cells) out.push_back(Json::array({c.row, c.col}));
    return out;
}

}  // namespace

long strip_exponent(int k, int l) {
    if (k < l) std::swap(k, l);
    return static_cast<long>(2 * l + k - 1) * k / 2;
}

StripCertificate strip_bound(const Partition& lambda, int k, int l, const Rational& alpha) {
    const int n = lambda.size();
    if (k < 0 || l < 0) throw HypothesisError("k and l must be non-negative");
    if (alpha <= Rational(1)) throw HypothesisError("alpha > 1 fails: alpha = " + alpha.to_string());
    if (!in_hook_class(lambda, k, l)) {
        throw HypothesisError("lambda in H(k,l) fails: lambda_" + std::to_string(k + 1) + " = " +
                              std::to_string(lambda.part(k + 1)) + " > l = " + std::to_string(l));
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

    StripCertificate out;
    const bool swap = k < l;
    const Partition shape = swap ? conjugate(lambda) : lambda;
    if (swap) std::swap(k, l);
    out.k = k;
    out.l = l;
    out.conjugated = swap;
    out.m = strip_exponent(k, l);

    out.t.resize(static_cast<std::size_t>(k + l));
    for (int s = 1; s <= l; ++s) out.t[static_cast<std::size_t>(s - 1)] = shape.column(s);
    for (int s = 1; s <= k; ++s) {
        out.t[static_cast<std::size_t>(l + s - 1)] = std::max(shape.part(s) - l, 0);
    }
    long t_sum = 0;
    for (int ti : out.t) t_sum += ti;
    require_consistent(t_sum == n, "sum of t differs from n");

    // mu_i = l + k - i for i = 1..k
    auto mu = [&](int i) { return i <= k ? l + k - i : 0; };
    BigInt product_a = 1;
    BigInt product_bc = 1;
    for (const auto& c : shape.cells()) {
        const int h = hook_length(shape, c);
        if (c.col <= mu(c.row)) {
            out.cells_a.push_back(c);
            product_a *= h;
        } else if (c.row >= k + 1) {
            out.cells_b.push_back(c);
            product_bc *= h;
            // column c.col <= l; row index inside the column overhang is c.row - k
            const int i = c.row - k;
            require_consistent(c.col <= l, "B cell outside the first l columns");
            require_consistent(h < out.t[static_cast<std::size_t>(c.col - 1)] - i + 1,
                               "B hook inequality fails at " + to_string(c));
        } else {
            out.cells_c.push_back(c);
            product_bc *= h;
            const int j = c.col - mu(c.row);
            require_consistent(h <= out.t[static_cast<std::size_t>(l + c.row - 1)] - j + 1,
                               "C hook inequality fails at " + to_string(c));
        }
    }
    require_consistent(static_cast<long>(out.cells_a.size()) <= out.m, "|A| exceeds m");

    BigInt n_pow_m;
    mpz_ui_pow_ui(n_pow_m.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(out.m));
    BigInt t_factorials = 1;
    for (int ti : out.t) t_factorials *= factorial(ti);
    require_consistent(product_a <= n_pow_m, "product of A hooks exceeds n^m");
    require_consistent(product_bc <= t_factorials, "product of B, C hooks exceeds prod t_i!");

    const BigInt f = degree(lambda);

    BoundCertificate factorial_step;
    factorial_step.bound_name = "strip-factorial";
    factorial_step.add_parameter("m", out.m);
    factorial_step.set_comparison(
        compare_at_least(f, PowerBound{1, 0, Rational(factorial(n), n_pow_m * t_factorials)}));

    BoundCertificate& cert = out.certificate;
    cert.bound_name = "strip";
    cert.add_parameter("alpha", alpha);
    cert.add_parameter("k", static_cast<long>(k));
    cert.add_parameter("l", static_cast<long>(l));
    cert.add_parameter("m", out.m);
    cert.add_parameter("n", static_cast<long>(n));
    cert.exponent = Rational(n);
    cert.set_comparison(compare_at_least(f, PowerBound{alpha, Rational(n), Rational(1, n_pow_m)}));
    cert.details["partition"] = lambda.to_string();
    cert.details["conjugated"] = swap;
    Json t = Json::array();
    for (int ti : out.t) t.push_back(ti);
    cert.details["t"] = t;
    cert.details["cells_a"] = cells_json(out.cells_a);
    cert.details["cells_b"] = cells_json(out.cells_b);
    cert.details["cells_c"] = cells_json(out.cells_c);
    cert.checks.push_back(std::move(factorial_step));
    return out;
}

Json to_json(const StripCertificate& strip) {
    return to_json(strip.certificate);
}

}  // namespace hookbound
