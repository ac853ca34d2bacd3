#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hookbound/partition.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

struct PartitionBounds {
    std::optional<int> max_part;   // lambda_1 <= max_part
    std::optional<int> max_parts;  // lambda'_1 <= max_parts
};

/// Streams the partitions of n satisfying the bounds in reverse
/// lexicographic order: (5), (4,1), (3,2), (3,1,1), ...
/// Single consumer.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, PartitionBounds bounds = {});

    std::optional<Partition> next();

private:
    bool fill_from(std::size_t index, int remaining, int cap);

    int n_;
    int max_part_;
    int max_parts_;
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n, PartitionBounds bounds = {});

/// Counts of partitions fitting in boxes: count(m, p, k) is the number of
/// partitions of m with parts <= p and at most k parts, for m <= n, p <= max_part,
/// k <= max_parts. Backs exact-uniform sampling by unranking.
class BoxCounts {
public:
    BoxCounts(int n, int max_part, int max_parts);

    const BigInt& count(int m, int p, int k) const;
    /// Number of partitions of n within the full box.
    const BigInt& total() const { return count(n_, max_part_, max_parts_); }

    /// The rank-th partition (0-based) of m within the (p, k) box, in reverse
    /// lexicographic order. Requires 0 <= rank < count(m, p, k).
    Partition unrank(int m, int p, int k, const BigInt& rank) const;
    Partition unrank(const BigInt& rank) const { return unrank(n_, max_part_, max_parts_, rank); }

    int n() const { return n_; }
    int max_part() const { return max_part_; }
    int max_parts() const { return max_parts_; }

private:
    std::size_t index(int m, int p, int k) const;

    int n_;
    int max_part_;
    int max_parts_;
    std::vector<BigInt> table_;
};

/// Deterministic random source for sampling (GMP Mersenne twister).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed);
    /// Uniform in [0, bound), bound > 0.
    BigInt below(const BigInt& bound);

private:
    gmp_randclass state_;
};

/// Exact-uniform sample among partitions of n with lambda_1 <= max_part and
/// lambda'_1 <= max_parts. Throws DomainError when that set is empty.
Partition sample_partition(int n, int max_part, int max_parts, std::uint64_t seed);
Partition sample_partition(const BoxCounts& counts, SampleRng& rng);

/// floor(n / alpha) for alpha > 0, the usual row/column cap.
int floor_div(int n, const Rational& alpha);

}  // namespace hookbound
