#include "hookbound/enumerate.hpp"

#include <algorithm>

#include "hookbound/errors.hpp"

namespace hookbound {

PartitionEnumerator::PartitionEnumerator(int n, PartitionBounds bounds)
    : n_(n), max_part_(std::min(bounds.max_part.value_or(n), n)),
      max_parts_(std::min(bounds.max_parts.value_or(n), n)) {
    if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
    max_part_ = std::max(max_part_, 0);
    max_parts_ = std::max(max_parts_, 0);
}

// Greedily fills current_[index..] with parts <= cap summing to `remaining`,
// respecting max_parts_. Returns false if impossible.
bool PartitionEnumerator::fill_from(std::size_t index, int remaining, int cap) {
    current_.resize(index);
    const long slots = static_cast<long>(max_parts_) - static_cast<long>(index);
    if (remaining > 0 && (cap <= 0 || slots <= 0 || static_cast<long>(cap) * slots < remaining)) {
        return false;
    }
    while (remaining > 0) {
        const int part = std::min(cap, remaining);
        current_.push_back(part);
        remaining -= part;
    }
    return true;
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!fill_from(0, n_, max_part_)) {
            done_ = true;
            return std::nullopt;
        }
        return Partition(current_);
    }
    // Decrease the rightmost part that admits a feasible refill of the suffix.
    int suffix = 0;
    for (std::size_t i = current_.size(); i-- > 0;) {
        suffix += current_[i];
        const int lowered = current_[i] - 1;
        if (lowered < 1) continue;
        current_[i] = lowered;
        std::vector<int> saved(current_.begin(), current_.end());
        if (fill_from(i + 1, suffix - lowered, lowered)) return Partition(current_);
        current_ = std::move(saved);
        current_[i] = lowered + 1;
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Partition> enumerate_partitions(int n, PartitionBounds bounds) {
    std::vector<Partition> out;
    PartitionEnumerator gen(n, bounds);
    while (auto p = gen.next()) out.push_back(std::move(*p));
    return out;
}

BoxCounts::BoxCounts(int n, int max_part, int max_parts)
    : n_(n), max_part_(std::clamp(max_part, 0, std::max(n, 0))),
      max_parts_(std::clamp(max_parts, 0, std::max(n, 0))) {
    if (n < 0) throw DomainError("cannot count partitions of a negative integer");
    table_.resize(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(max_part_ + 1) *
                  static_cast<std::size_t>(max_parts_ + 1));
    for (int k = 0; k <= max_parts_; ++k) {
        for (int p = 0; p <= max_part_; ++p) {
            for (int m = 0; m <= n_; ++m) {
                BigInt& cell = table_[index(m, p, k)];
                if (m == 0) {
                    cell = 1;
                } else if (p == 0 || k == 0) {
                    cell = 0;
                } else {
                    // either no part equals p, or strip one part of size p
                    cell = table_[index(m, p - 1, k)];
                    if (m >= p) cell += table_[index(m - p, p, k - 1)];
                }
            }
        }
    }
}

std::size_t BoxCounts::index(int m, int p, int k) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(max_part_ + 1) +
            static_cast<std::size_t>(p)) *
               static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(m);
}

const BigInt& BoxCounts::count(int m, int p, int k) const {
    if (m < 0 || m > n_) throw DomainError("count index m out of range");
    p = std::clamp(p, 0, max_part_);
    k = std::clamp(k, 0, max_parts_);
    return table_[index(m, p, k)];
}

Partition BoxCounts::unrank(int m, int p, int k, const BigInt& rank) const {
    if (rank < 0 || rank >= count(m, p, k)) throw DomainError("rank out of range");
    BigInt r = rank;
    std::vector<int> parts;
    int cap = std::min(p, m);
    int slots = k;
    while (m > 0) {
        bool placed = false;
        for (int a = std::min(cap, m); a >= 1; --a) {
            const BigInt& block = count(m - a, a, slots - 1);
            if (r < block) {
                parts.push_back(a);
                m -= a;
                cap = a;
                --slots;
                placed = true;
                break;
            }
            r -= block;
        }
        if (!placed) throw ConsistencyError("unranking ran past the count table");
    }
    return Partition(std::move(parts));
}

SampleRng::SampleRng(std::uint64_t seed) : state_(gmp_randinit_mt) {
    state_.seed(BigInt(static_cast<unsigned long>(seed)));
}

BigInt SampleRng::below(const BigInt& bound) { return state_.get_z_range(bound); }

Partition sample_partition(const BoxCounts& counts, SampleRng& rng) {
    if (counts.total() == 0) {
        throw DomainError("no partition of " + std::to_string(counts.n()) + " with parts <= " +
                          std::to_string(counts.max_part()) + " and at most " +
                          std::to_string(counts.max_parts()) + " parts");
    }
    return counts.unrank(rng.below(counts.total()));
}

Partition sample_partition(int n, int max_part, int max_parts, std::uint64_t seed) {
    BoxCounts counts(n, max_part, max_parts);
    SampleRng rng(seed);
    return sample_partition(counts, rng);
}

int floor_div(int n, const Rational& alpha) {
    const Rational q = Rational(n) / alpha;
    return static_cast<int>(q.floor().get_si());
}

}  // namespace hookbound
