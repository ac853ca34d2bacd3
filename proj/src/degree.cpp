#include "hookbound/degree.hpp"

#include <cmath>
#include <numbers>

#include "hookbound/enumerate.hpp"
#include "hookbound/errors.hpp"

namespace hookbound {

namespace {

void guard(int n, int limit, const char* what) {
    if (n > limit) {
        throw GuardError(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                         " (got n = " + std::to_string(n) + ")");
    }
}

// Fills entries n, n-1, ..., 1 by removing corners; each leaf is one tableau.
void grow(std::vector<int>& rows, int next_entry, std::vector<std::vector<int>>& entries,
          const Partition& shape, const std::function<void(const StandardTableau&)>& visit) {
    if (next_entry == 0) {
        visit(StandardTableau{shape, entries});
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int len = rows[i];
        const int below = (i + 1 < rows.size()) ? rows[i + 1] : 0;
        if (len > 0 && len > below) {
            entries[i][static_cast<std::size_t>(len - 1)] = next_entry;
            --rows[i];
            grow(rows, next_entry - 1, entries, shape, visit);
            ++rows[i];
        }
    }
}

BigInt count_fillings(std::vector<int>& rows, int remaining) {
    if (remaining == 0) return 1;
    BigInt total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int below = (i + 1 < rows.size()) ? rows[i + 1] : 0;
        if (rows[i] > below) {
            --rows[i];
            total += count_fillings(rows, remaining - 1);
            ++rows[i];
        }
    }
    return total;
}

}  // namespace

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt falling_factorial(int n, int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= n - i;
    return out;
}

BigInt hook_product(const Partition& lambda) {
    BigInt product = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) product *= hook_length(lambda, {i, j});
    }
    return product;
}

BigInt degree(const Partition& lambda) {
    const BigInt numerator = factorial(lambda.size());
    const BigInt denominator = hook_product(lambda);
    BigInt quotient;
    mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return quotient;
}

double log_degree(const Partition& lambda) {
    if (lambda.size() < 1) throw DomainError("log_degree needs n >= 1");
    return log_big(degree(lambda));
}

BigInt count_syt_bruteforce(const Partition& lambda) {
    guard(lambda.size(), kMaxBruteForceN, "count_syt_bruteforce");
    std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
    return count_fillings(rows, lambda.size());
}

void for_each_standard_tableau(const Partition& lambda,
                               const std::function<void(const StandardTableau&)>& visit) {
    guard(lambda.size(), kMaxBruteForceN, "standard tableau enumeration");
    std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
    std::vector<std::vector<int>> entries;
    for (int len : rows) entries.emplace_back(static_cast<std::size_t>(len), 0);
    grow(rows, lambda.size(), entries, lambda, visit);
}

bool verify_remark_n_ge_h(const Partition& lambda) {
    guard(lambda.size(), kMaxRemarkN, "verify_remark_n_ge_h");
    const int n = lambda.size();
    const auto cells = lambda.cells();
    std::vector<int> hooks;
    hooks.reserve(cells.size());
    for (const auto& c : cells) hooks.push_back(hook_length(lambda, c));
    bool ok = true;
    for_each_standard_tableau(lambda, [&](const StandardTableau& t) {
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            if (n + 1 - t.at(cells[idx]) < hooks[idx]) ok = false;
        }
    });
    return ok;
}

bool sum_squares_identity(int n) {
    guard(n, kMaxSumSquaresN, "sum_squares_identity");
    BigInt sum = 0;
    PartitionEnumerator gen(n);
    while (auto lambda = gen.next()) {
        const BigInt f = degree(*lambda);
        sum += f * f;
    }
    return sum == factorial(n);
}

double RobbinsBounds::lower() const { return std::exp(log_lower); }
double RobbinsBounds::upper() const { return std::exp(log_upper); }

RobbinsBounds robbins_bounds(int n) {
    if (n < 1) throw DomainError("robbins_bounds needs n >= 1");
    const double x = n;
    const double base = 0.5 * std::log(2.0 * std::numbers::pi * x) + x * (std::log(x) - 1.0);
    return RobbinsBounds{base + 1.0 / (12.0 * x + 1.0), base + 1.0 / (12.0 * x),
                         x * (std::log(x) - 1.0)};
}

}  // namespace hookbound
