#include "hookbound/special_bounds.hpp"

#include "hookbound/degree.hpp"
#include "hookbound/errors.hpp"

namespace hookbound {

BoundCertificate rectangle_bound(int a, int b) {
    if (a < 1 || b < 1) throw HypothesisError("rectangle sides must be positive");
    const bool swapped = b < a;
    if (swapped) std::swap(a, b);
    const int n = a * b;
    const BigInt f = degree(Partition::rectangle(a, b));

    BigInt b_fact_pow;
    mpz_pow_ui(b_fact_pow.get_mpz_t(), factorial(b).get_mpz_t(), static_cast<unsigned long>(a));

    BoundCertificate cert;
    cert.bound_name = "rectangle";
    cert.add_parameter("a", static_cast<long>(a));
    cert.add_parameter("b", static_cast<long>(b));
    cert.add_parameter("n", static_cast<long>(n));
    cert.exponent = Rational(n);
    cert.set_comparison(
        compare_at_least(f, PowerBound{Rational(1, 4), Rational(n), Rational(factorial(n), b_fact_pow)}));
    cert.details["swapped"] = swapped;
    cert.details["degree"] = f.get_str();

    BoundCertificate power;
    power.bound_name = "rectangle-power";
    power.add_parameter("a", static_cast<long>(a));
    power.add_parameter("n", static_cast<long>(n));
    power.exponent = Rational(n);
    power.set_comparison(compare_at_least(f, PowerBound{Rational(a, 4), Rational(n), 1}));
    cert.checks.push_back(std::move(power));
    return cert;
}

BoundCertificate overexponential_bound(const Partition& lambda, const Rational& eps,
                                       const Rational& gamma) {
    const int n = lambda.size();
    if (eps <= Rational(0)) throw HypothesisError("eps > 0 fails: eps = " + eps.to_string());
    if (gamma <= Rational(0)) throw HypothesisError("gamma > 0 fails: gamma = " + gamma.to_string());
    if (n < 1) throw HypothesisError("n >= 1 fails");
    const int delta = diagonal(lambda);
    const Rational ratio = Rational(static_cast<long>(delta) * delta, n);
    if (ratio < eps) {
        throw HypothesisError("delta^2/n >= eps fails: " + ratio.to_string() + " < " + eps.to_string());
    }

    const Partition square = Partition::rectangle(delta, delta);
    const BigInt f_lambda = degree(lambda);
    const BigInt f_square = degree(square);
    const long k = static_cast<long>(delta) * delta;

    BoundCertificate cert;
    cert.bound_name = "overexponential";
    cert.add_parameter("eps", eps);
    cert.add_parameter("gamma", gamma);
    cert.add_parameter("delta", static_cast<long>(delta));
    cert.add_parameter("k", k);
    cert.add_parameter("n", static_cast<long>(n));
    cert.add_parameter("beta_log", gamma.log() / eps.to_double());
    cert.exponent = Rational(n);
    cert.set_comparison(compare_at_least(f_square, PowerBound{gamma, Rational(n), 1}));
    cert.details["partition"] = lambda.to_string();

    if (!contains(square, lambda)) throw ConsistencyError("diagonal square is not contained in lambda");
    BoundCertificate containment;
    containment.bound_name = "containment";
    containment.set_comparison(compare_at_least(f_lambda, PowerBound{1, 0, Rational(f_square, 1)}));
    cert.checks.push_back(std::move(containment));

    // beta^k = gamma^(k/eps)
    BoundCertificate square_rate;
    square_rate.bound_name = "square-rate";
    square_rate.exponent = Rational(k) / eps;
    square_rate.set_comparison(compare_at_least(f_square, PowerBound{gamma, square_rate.exponent, 1}));
    square_rate.required = false;
    cert.checks.push_back(std::move(square_rate));
    return cert;
}

}  // namespace hookbound
