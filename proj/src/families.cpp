#include "hookbound/families.hpp"

#include <algorithm>
#include <cmath>

#include "hookbound/errors.hpp"

namespace hookbound {

Partition balanced_partition(int n) {
    if (n <= 0) return Partition();
    int rows = 1;
    while (rows * rows < n) ++rows;
    const int base = n / rows;
    const int extra = n % rows;
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) parts.push_back(base + (i < extra ? 1 : 0));
    return Partition(std::move(parts));
}

std::optional<Partition> staircase_partition(int n, const Rational& alpha) {
    const int cap = floor_div(n, alpha);
    for (int delta = n; delta >= 1; --delta) {
        const long stair = static_cast<long>(delta) * (delta - 1) / 2;
        for (int c = delta + 1;; ++c) {
            const long top = static_cast<long>(c) * delta + stair;
            if (top > n) break;
            const int first = c + delta - 1;
            const int rest = n - static_cast<int>(top);
            const int tail_rows = (rest + delta - 1) / delta;
            if (first > cap || delta + tail_rows > cap) continue;
            std::vector<int> parts;
            for (int i = 1; i <= delta; ++i) parts.push_back(c + delta - i);
            for (int left = rest; left > 0; left -= delta) parts.push_back(std::min(left, delta));
            return Partition(std::move(parts));
        }
    }
    return std::nullopt;
}

namespace {

int free_cells(int n, int delta) { return n - (3 * delta * delta + delta) / 2; }

}  // namespace

StrictTopSampler::StrictTopSampler(int n, int delta, const Rational& alpha)
    : n_(n), delta_(delta), free_(free_cells(n, delta)),
      top_(std::max(free_, 0), std::max(floor_div(n, alpha) - 2 * delta, 0), delta),
      tail_(std::max(free_, 0), delta, std::max(floor_div(n, alpha) - delta, 0)) {
    if (delta < 1) throw DomainError("StrictTopSampler needs delta >= 1");
    total_ = 0;
    if (free_ < 0 || floor_div(n, alpha) < 2 * delta) return;
    for (int j = 0; j <= free_; ++j) {
        total_ += top_.count(j, top_.max_part(), delta) * tail_.count(free_ - j, delta, tail_.max_parts());
    }
}

Partition StrictTopSampler::unrank(const BigInt& rank) const {
    if (rank < 0 || rank >= total_) throw DomainError("rank out of range");
    BigInt r = rank;
    for (int j = 0; j <= free_; ++j) {
        const BigInt& top_count = top_.count(j, top_.max_part(), delta_);
        const BigInt& tail_count = tail_.count(free_ - j, delta_, tail_.max_parts());
        const BigInt block = top_count * tail_count;
        if (r >= block) {
            r -= block;
            continue;
        }
        BigInt top_rank;
        BigInt tail_rank;
        mpz_fdiv_qr(top_rank.get_mpz_t(), tail_rank.get_mpz_t(), r.get_mpz_t(), tail_count.get_mpz_t());
        const Partition nu = top_.unrank(j, top_.max_part(), delta_, top_rank);
        const Partition kappa = tail_.unrank(free_ - j, delta_, tail_.max_parts(), tail_rank);
        std::vector<int> parts;
        for (int i = 1; i <= delta_; ++i) parts.push_back(nu.part(i) + 2 * delta_ - i + 1);
        for (int p : kappa.parts()) parts.push_back(p);
        Partition out(std::move(parts));
        if (out.size() != n_) throw ConsistencyError("strict-top sampler produced the wrong size");
        return out;
    }
    throw ConsistencyError("strict-top sampler ran past its total");
}

Partition StrictTopSampler::sample(SampleRng& rng) const {
    if (total_ == 0) throw DomainError("no partition matches the strict-top constraints");
    return unrank(rng.below(total_));
}

}  // namespace hookbound
