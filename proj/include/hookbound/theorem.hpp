#pragma once

#include <string>

#include "hookbound/certificate.hpp"
#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

enum class GrowthClass { M1, M2, M3 };

std::string to_string(GrowthClass c);

/// gamma = (ln alpha - ln beta) / ln alpha, the largest admissible choice.
double theorem_gamma(const Rational& alpha, const Rational& beta);

/// Class of n by the diagonal:
///   M1: delta < 18 alpha
///   M2: delta >= 18 alpha and gamma n <= 5/2 delta^2 + alpha rho (ties within 1e-9 go here)
///   M3: otherwise.
GrowthClass classify(int n, int delta, const Rational& alpha, double gamma);

/// eps handed to the square bound for class M2 (real valued).
double m2_epsilon(const Rational& alpha, double gamma);

/// Main comparison f^lambda >= beta^n, exact. The bound dispatched by class
/// (strip with k = l = ceil(18 alpha), square bound, or general bound) is
/// attached as an informational check. Requires 1 < beta < alpha, n >= 1 and
/// lambda_1, lambda'_1 <= n/alpha.
BoundCertificate theorem_classify(const Partition& lambda, const Rational& alpha, const Rational& beta);

}  // namespace hookbound
