#pragma once

#include <vector>

#include "hookbound/certificate.hpp"
#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

/// Certificate for f^lambda >= alpha^n / n^m on the (k, l) hook class.
///
/// When k < l the construction runs on the conjugate with the roles of k
/// and l exchanged (f is invariant under conjugation); `conjugated` is then
/// set, and t and the cell sets refer to the conjugate diagram.
struct StripCertificate {
    int k = 0;
    int l = 0;
    bool conjugated = false;
    /// t_1..t_{k+l}: the first l column lengths, then the row overhangs past column l.
    std::vector<int> t;
    long m = 0;
    /// A = lambda cap mu, B = rows below k outside mu, C = rows 1..k outside mu,
    /// with mu = (l+k-1, ..., l+1, l).
    std::vector<Cell> cells_a;
    std::vector<Cell> cells_b;
    std::vector<Cell> cells_c;
    BoundCertificate certificate;
};

/// Exponent m = (2l + k - 1) k / 2 for k >= l, and the conjugate value otherwise.
long strip_exponent(int k, int l);

/// Requires alpha > 1, lambda in H(k, l), n >= 1 and lambda_1, lambda'_1 <= n / alpha;
/// throws HypothesisError naming the first failing condition.
StripCertificate strip_bound(const Partition& lambda, int k, int l, const Rational& alpha);

/// The certificate JSON; t and the cell sets travel in its details.
Json to_json(const StripCertificate& strip);

}  // namespace hookbound
