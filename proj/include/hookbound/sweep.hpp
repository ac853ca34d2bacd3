#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hookbound/certificate.hpp"
#include "hookbound/rational.hpp"

namespace hookbound {

enum class Family { Balanced, Staircase, Enumerate, Sample };

Family parse_family(const std::string& name);
std::string to_string(Family f);

struct SweepOptions {
    Family family = Family::Balanced;
    Rational alpha = 2;
    Rational beta = Rational(3, 2);
    int n_from = 1;
    int n_to = 1;
    int samples = 1;
    std::uint64_t seed = 0;
    /// Largest n accepted by the enumerate family.
    int enumerate_cap = 40;
};

/// One certified (n, partition) pair.
struct GrowthRow {
    int n = 0;
    std::string partition;
    int delta = 0;
    std::string growth_class;  // M1/M2/M3, "-" when the hypotheses fail
    double log_f_per_n = 0;
    double log_beta = 0;
    /// rhs_log / n of the bound dispatched for the class (NaN if none).
    double bound_log_per_n = 0;
    std::string verdict;  // PASS / FAIL / MARGINAL / HYPOTHESIS
    double margin = 0;    // ln f - n ln beta
};

struct GrowthReport {
    std::string family;
    Rational alpha = 2;
    Rational beta = Rational(3, 2);
    std::vector<GrowthRow> rows;
    /// Least n such that every row with n' >= n passes; nullopt if the last row fails.
    std::optional<int> n0;
};

/// Throws DomainError for an enumerate sweep beyond the cap.
GrowthReport run_sweep(const SweepOptions& options);

/// Column order: n,partition,delta,class,log_f_per_n,log_beta,bound_log_per_n,verdict,margin.
/// Logs use 15 significant digits.
std::string to_csv(const GrowthReport& report);
Json to_json(const GrowthReport& report);

std::optional<int> empirical_n0(const std::vector<GrowthRow>& rows);

}  // namespace hookbound
