#include <doctest.h>

#include <mpfr.h>

#include <cmath>
#include <map>

#include "hookbound/degree.hpp"
#include "hookbound/enumerate.hpp"
#include "hookbound/errors.hpp"

using namespace hookbound;

namespace {

// ln of an exact integer at 256 bits of precision
double reference_log(const BigInt& value) {
    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_z(x, value.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    const double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

BigInt big(const char* digits) { return BigInt(digits); }

}  // namespace

TEST_CASE("degree examples") {
    CHECK(degree(Partition::parse("2,1")) == 2);
    CHECK(degree(Partition::parse("3,3")) == 5);
    CHECK(degree(Partition::parse("2,2")) == 2);
    CHECK(degree(Partition::parse("3,2")) == 5);
    CHECK(degree(Partition::parse("3,3,3")) == 42);
    CHECK(degree(Partition::parse("5")) == 1);
    CHECK(degree(Partition::parse("1,1,1,1")) == 1);
    CHECK(degree(Partition()) == 1);
    CHECK(degree(Partition::rectangle(6, 6)) == big("1671643033734960"));
    CHECK(degree(Partition::parse("9,6,4,2,2,1")) == big("53006865912"));
    CHECK(hook_product(Partition::parse("2,1")) == 3);
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(falling_factorial(10, 3) == 720);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(3, 5) == 0);
}

TEST_CASE("log degree") {
    CHECK(log_degree(Partition::parse("2,1")) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(log_degree(Partition::parse("3,3")) == doctest::Approx(std::log(5.0)).epsilon(1e-12));
    CHECK(log_degree(Partition::parse("5")) == 0.0);
    CHECK_THROWS_AS(log_degree(Partition()), DomainError);
    // 50-digit references
    CHECK(std::abs(log_degree(Partition::parse("5,4,2,1")) - 8.66129353538999428976) < 1e-12 * 8.7);
    CHECK(std::abs(log_degree(Partition::parse("4,4,4")) - 6.13556489108173884998) < 1e-12 * 6.2);
    CHECK(std::abs(log_degree(Partition::rectangle(6, 6)) - 36 * std::log(1.5) -
                   20.4558394983156) < 1e-11);
}

TEST_CASE("log degree against a 256-bit reference for n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const double ref = reference_log(degree(lambda));
            REQUIRE(std::abs(log_degree(lambda) - ref) <= 1e-12 * std::abs(ref));
        }
    }
}

TEST_CASE("hook formula agrees with tableau counting for n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            REQUIRE(degree(lambda) == count_syt_bruteforce(lambda));
        }
    }
}

TEST_CASE("tableau listing") {
    long count = 0;
    for_each_standard_tableau(Partition::parse("3,2"), [&](const StandardTableau& t) {
        ++count;
        CHECK(t.at({1, 1}) == 1);
        CHECK(t.at({1, 2}) < t.at({1, 3}));
        CHECK(t.at({1, 2}) < t.at({2, 2}));
    });
    CHECK(count == 5);
}

TEST_CASE("sum of squares is n!") {
    for (int n = 1; n <= 11; ++n) CHECK(sum_squares_identity(n));
}

TEST_CASE("conjugation symmetry for n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            REQUIRE(degree(lambda) == degree(conjugate(lambda)));
        }
    }
}

TEST_CASE("tableau entries dominate hooks for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) REQUIRE(verify_remark_n_ge_h(lambda));
    }
}

TEST_CASE("containment monotonicity for n <= 10") {
    std::vector<std::pair<Partition, BigInt>> all;
    for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) all.emplace_back(lambda, degree(lambda));
    }
    long pairs = 0;
    for (const auto& [mu, fmu] : all) {
        for (const auto& [lambda, flambda] : all) {
            if (mu.size() > lambda.size() || !contains(mu, lambda)) continue;
            ++pairs;
            REQUIRE(fmu <= flambda);
        }
    }
    CHECK(pairs > 0);
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(count_syt_bruteforce(Partition::parse("13")), GuardError);
    CHECK_THROWS_AS(verify_remark_n_ge_h(Partition::parse("11")), GuardError);
    CHECK_THROWS_AS(sum_squares_identity(13), GuardError);
}

TEST_CASE("Robbins bounds bracket ln n!") {
    for (int n = 1; n <= 200; ++n) {
        const auto b = robbins_bounds(n);
        const double ln_fact = std::lgamma(n + 1.0);
        CHECK(b.log_lower <= ln_fact + 1e-12);
        CHECK(ln_fact <= b.log_upper + 1e-12);
        CHECK(b.log_weak <= ln_fact + 1e-12);
    }
    const auto ten = robbins_bounds(10);
    CHECK(ten.log_lower < 15.1044125730755152952);
    CHECK(15.1044125730755152952 < ten.log_upper);
    CHECK(ten.log_upper - ten.log_lower < 1e-4);
}
