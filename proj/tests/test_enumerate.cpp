#include <doctest.h>

#include <cmath>
#include <map>

#include "hookbound/enumerate.hpp"
#include "hookbound/errors.hpp"

using namespace hookbound;

namespace {
// p(n), n = 0..40, from direct listing
const std::vector<long> kPartitionCounts{
    1,    1,    2,    3,    5,    7,    11,   15,   22,   30,    42,    56,    77,    101,
    135,  176,  231,  297,  385,  490,  627,  792,  1002, 1255,  1575,  1958,  2436,  3010,
    3718, 4565, 5604, 6842, 8349, 10143, 12310, 14883, 17977, 21637, 26015, 31185, 37338};
}  // namespace

TEST_CASE("enumeration order and bounds") {
    const auto five = enumerate_partitions(5);
    REQUIRE(five.size() == 7);
    CHECK(five.front() == Partition::parse("5"));
    CHECK(five[1] == Partition::parse("4,1"));
    CHECK(five[2] == Partition::parse("3,2"));
    CHECK(five.back() == Partition::parse("1,1,1,1,1"));
    for (std::size_t i = 1; i < five.size(); ++i) CHECK(five[i] < five[i - 1]);

    const auto two_rows = enumerate_partitions(4, {std::nullopt, 2});
    CHECK(two_rows == std::vector<Partition>{Partition::parse("4"), Partition::parse("3,1"),
                                             Partition::parse("2,2")});
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(7, {2, 3}).empty());
    CHECK(enumerate_partitions(6, {2, 3}) == std::vector<Partition>{Partition::parse("2,2,2")});
}

TEST_CASE("enumeration completeness against the partition counts") {
    for (int n = 0; n <= 40; ++n) {
        long count = 0;
        PartitionEnumerator gen(n);
        while (gen.next()) ++count;
        REQUIRE(count == kPartitionCounts[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("box counts agree with bounded enumeration") {
    const BoxCounts counts(14, 14, 14);
    for (int m = 0; m <= 14; ++m) {
        for (int p = 0; p <= 8; ++p) {
            for (int k = 0; k <= 8; ++k) {
                const auto listed = enumerate_partitions(m, {p, k});
                REQUIRE(counts.count(m, p, k) == static_cast<long>(listed.size()));
            }
        }
    }
    // constrained alpha = 2 counts, from direct listing
    const std::vector<long> expected{18, 19, 39, 42, 75};
    for (int n = 10; n <= 14; ++n) {
        CHECK(BoxCounts(n, n / 2, n / 2).total() == expected[static_cast<std::size_t>(n - 10)]);
    }
}

TEST_CASE("unranking follows enumeration order") {
    const BoxCounts counts(12, 6, 5);
    const auto listed = enumerate_partitions(12, {6, 5});
    REQUIRE(counts.total() == static_cast<long>(listed.size()));
    for (std::size_t r = 0; r < listed.size(); ++r) {
        REQUIRE(counts.unrank(BigInt(static_cast<long>(r))) == listed[r]);
    }
    CHECK_THROWS_AS(counts.unrank(counts.total()), DomainError);
}

TEST_CASE("sampling") {
    CHECK(sample_partition(6, 2, 3, 1) == Partition::parse("2,2,2"));
    CHECK(sample_partition(10, 10, 10, 42) == sample_partition(10, 10, 10, 42));
    CHECK_THROWS_AS(sample_partition(7, 2, 3, 1), DomainError);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Partition p = sample_partition(30, 7, 9, seed);
        CHECK(p.size() == 30);
        CHECK(p.part(1) <= 7);
        CHECK(p.length() <= 9);
    }
}

TEST_CASE("sampling is uniform: first-part frequencies within 4 sigma") {
    // exact counts by first part among partitions of 50 in a 25 x 25 box,
    // from direct listing (189550 partitions)
    const std::map<int, long> by_first_part{
        {2, 1},      {3, 64},     {4, 514},    {5, 1894},   {6, 4494},   {7, 7950},
        {8, 11521},  {9, 14429},  {10, 16289}, {11, 16981}, {12, 16714}, {13, 15716},
        {14, 14304}, {15, 12662}, {16, 11001}, {17, 9392},  {18, 7931},  {19, 6617},
        {20, 5488},  {21, 4508},  {22, 3692},  {23, 2999},  {24, 2432},  {25, 1957}};
    const long total = 189550;
    const BoxCounts counts(50, 25, 25);
    REQUIRE(counts.total() == total);

    const int draws = 100000;
    SampleRng rng(2024);
    std::map<int, long> observed;
    for (int i = 0; i < draws; ++i) ++observed[sample_partition(counts, rng).part(1)];

    double chi2 = 0;
    for (const auto& [first, count] : by_first_part) {
        const double p = static_cast<double>(count) / total;
        const double expected = draws * p;
        const double sigma = std::sqrt(draws * p * (1 - p));
        CHECK(std::abs(observed[first] - expected) <= 4 * sigma + 1e-9);
        chi2 += (observed[first] - expected) * (observed[first] - expected) / expected;
    }
    // 23 degrees of freedom; the 99.99% quantile is about 56
    CHECK(chi2 < 56);
}
