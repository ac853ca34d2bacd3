#pragma once

#include <optional>

#include "hookbound/enumerate.hpp"
#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

/// ceil(sqrt(n)) parts differing by at most one, larger parts first.
Partition balanced_partition(int n);

/// lambda_i = c + delta - i for i <= delta, followed by rows of length delta
/// (and one shorter row) absorbing the rest of n. delta is the largest value
/// for which some c > delta keeps lambda_1, lambda'_1 <= n / alpha; c is the
/// least such value. nullopt when no delta >= 1 works.
std::optional<Partition> staircase_partition(int n, const Rational& alpha);

/// Exact-uniform sampler over partitions of n with diagonal delta whose top
/// delta rows are strictly decreasing and longer than delta, and with
/// lambda_1, lambda'_1 <= n / alpha.
///
/// Such a partition splits uniquely into nu (at most delta parts) and kappa
/// (parts <= delta): lambda_i = nu_i + 2 delta - i + 1 for i <= delta, and the
/// rows below are kappa. Both halves are counted with box tables.
class StrictTopSampler {
public:
    StrictTopSampler(int n, int delta, const Rational& alpha);

    const BigInt& total() const { return total_; }
    Partition unrank(const BigInt& rank) const;
    Partition sample(SampleRng& rng) const;

private:
    int n_;
    int delta_;
    int free_;  // n minus the minimal staircase size
    BoxCounts top_;
    BoxCounts tail_;
    BigInt total_;
};

}  // namespace hookbound
