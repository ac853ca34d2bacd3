#pragma once

#include <optional>
#include <string>

#include "hookbound/certificate.hpp"
#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

/// Trace of the reduction of an arbitrary diagram to one with distinct top rows.
struct ReductionTrace {
    Partition input;
    int delta = 0;
    /// Rows i <= delta keep lambda_i - (i-1) if lambda_i >= delta + i - 1, else delta;
    /// columns likewise.
    Partition tilde;
    /// Largest index with tilde_s > delta (resp. tilde'_t > delta), 0 if none.
    /// Reported after the optional swap, so s >= t.
    int s = 0;
    int t = 0;
    /// Set when s < t forced working with the conjugate.
    bool conjugated = false;
    /// tilde with rows s+2..delta replaced by delta-1, ..., s+1.
    Partition mu;
    int n1 = 0;
    int n2 = 0;
    int delta_mu = 0;
    long rho_mu = 0;
    /// First failing strict-row hypothesis for mu (empty when mu qualifies).
    std::string mu_gate;
};

enum class ReduceMode {
    Certify,      // all hypotheses enforced
    RuleTracing,  // construction only; hypotheses on delta and n/alpha are not checked
};

/// Requires delta >= 18 alpha, lambda_1, lambda'_1 <= n/alpha and n > delta^2
/// in Certify mode. Asserts n1 >= n - delta^2 + delta, the formula for n2,
/// delta(mu) >= [delta/2] + 1 and that mu sits inside lambda (or lambda').
ReductionTrace reduce(const Partition& lambda, const Rational& alpha,
                      ReduceMode mode = ReduceMode::Certify);

/// f^lambda >= alpha^(n - (5/2 delta^2 + alpha rho)). Required check:
/// containment f^lambda >= f^mu. When mu meets the strict-row hypotheses, the
/// strict bound on mu and its lift to lambda are attached as well.
BoundCertificate general_bound(const Partition& lambda, const Rational& alpha);

Json to_json(const ReductionTrace& trace);

}  // namespace hookbound
