#pragma once

#include "hookbound/certificate.hpp"
#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

/// Rectangle (b^a), n = ab. The main comparison is the exact inequality
///   f >= n! / (b!)^a * 4^-n
/// (after swapping so that b >= a); a required check records f >= (a/4)^n.
BoundCertificate rectangle_bound(int a, int b);

/// Square bound on a diagram with large diagonal. With delta = delta(lambda)
/// and mu = (delta^delta), the main comparison is f^mu >= gamma^n at this n;
/// required check: f^lambda >= f^mu (containment); informational check:
/// f^mu >= beta^(delta^2) with beta = gamma^(1/eps).
///
/// Requires eps > 0, gamma > 0 and delta^2 / n >= eps (exact).
BoundCertificate overexponential_bound(const Partition& lambda, const Rational& eps,
                                       const Rational& gamma);

}  // namespace hookbound
