#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

/// Guards for the exhaustive oracles.
inline constexpr int kMaxBruteForceN = 12;
inline constexpr int kMaxRemarkN = 10;
inline constexpr int kMaxSumSquaresN = 12;

BigInt factorial(int n);
/// n (n-1) ... (n-k+1)
BigInt falling_factorial(int n, int k);

/// Product of all hook lengths of lambda.
BigInt hook_product(const Partition& lambda);

/// f^lambda = n! / prod h_ij, exact. The empty partition has degree 1.
BigInt degree(const Partition& lambda);

/// ln f^lambda from the exact value. Requires n >= 1.
double log_degree(const Partition& lambda);

/// Number of standard tableaux, by growing fillings one entry at a time.
/// Independent of the hook formula. Throws GuardError for n > 12.
BigInt count_syt_bruteforce(const Partition& lambda);

/// A standard Young tableau: entries[i-1][j-1] = t_ij.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> entries;

    int at(const Cell& c) const {
        return entries[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }
};

/// Calls visit on every standard tableau of the shape. Throws GuardError for n > 12.
void for_each_standard_tableau(const Partition& lambda,
                               const std::function<void(const StandardTableau&)>& visit);

/// For every standard tableau T and every cell, n + 1 - t_ij >= h_ij.
/// Throws GuardError for n > 10.
bool verify_remark_n_ge_h(const Partition& lambda);

/// Sum over lambda |- n of (f^lambda)^2 == n!. Throws GuardError for n > 12.
bool sum_squares_identity(int n);

/// Two-sided Stirling bounds on n! (Robbins), in log form:
///   ln sqrt(2 pi n) + n ln(n/e) + 1/(12n+1) <= ln n! <= ... + 1/(12n),
/// plus the weak form ln(n^n e^-n) <= ln n!.
struct RobbinsBounds {
    double log_lower = 0;
    double log_upper = 0;
    double log_weak = 0;

    double lower() const;
    double upper() const;
};

RobbinsBounds robbins_bounds(int n);

}  // namespace hookbound
