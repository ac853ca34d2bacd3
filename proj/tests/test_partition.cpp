#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hookbound/enumerate.hpp"
#include "hookbound/errors.hpp"
#include "hookbound/partition.hpp"

using namespace hookbound;

namespace {
const Partition kExample = Partition::parse("9,6,4,2,2,1");
}

TEST_CASE("construction and text format") {
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("").size() == 0);
    CHECK(kExample.size() == 24);
    CHECK(kExample.to_string() == "9,6,4,2,2,1");
    CHECK(Partition::parse("3,1,0,0").to_string() == "3,1");
    CHECK(kExample.part(7) == 0);
    CHECK(kExample.part(0) == 0);
    CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,x"), ParseError);
    CHECK_THROWS_AS(Partition::parse("-1"), ParseError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0, 1}), DomainError);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(kExample) == Partition::parse("6,5,3,3,2,2,1,1,1"));
    CHECK(conjugate(Partition::parse("5")) == Partition::parse("1,1,1,1,1"));
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("hook lengths") {
    CHECK(hook_length(kExample, {1, 1}) == 14);
    CHECK(hook_length(Partition::parse("2,1"), {1, 1}) == 3);
    for (const auto& c : corner_cells(kExample)) CHECK(hook_length(kExample, c) == 1);
    CHECK_THROWS_AS(hook_length(kExample, {2, 7}), DomainError);
    try {
        hook_length(kExample, {2, 7});
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("(2,7)") != std::string::npos);
    }
}

TEST_CASE("diagonal") {
    CHECK(diagonal(kExample) == 3);
    CHECK(diagonal(Partition::parse("1")) == 1);
    CHECK(diagonal(Partition()) == 0);
    CHECK(diagonal(Partition::rectangle(4, 7)) == 4);
    CHECK(diagonal(Partition::rectangle(7, 4)) == 4);
}

TEST_CASE("hook classes") {
    CHECK(in_hook_class(kExample, 4, 3));
    CHECK_FALSE(in_hook_class(kExample, 1, 1));
    CHECK(in_hook_class(kExample, kExample.size(), 0));
}

TEST_CASE("corner cells are listed top to bottom") {
    const std::vector<Cell> expected{{1, 9}, {2, 6}, {3, 4}, {5, 2}, {6, 1}};
    CHECK(corner_cells(kExample) == expected);
    CHECK(corner_cells(Partition::rectangle(3, 5)) == std::vector<Cell>{{3, 5}});
    CHECK(corner_cells(Partition()).empty());
}

TEST_CASE("removing cells") {
    CHECK(remove_cells(Partition::parse("2,1"), {{1, 2}, {2, 1}}) == Partition::parse("1"));
    CHECK(remove_cells(Partition::rectangle(3, 4), {{3, 4}}) == Partition::parse("4,4,3"));
    const auto corners = corner_cells(kExample);
    CHECK(remove_cells(kExample, {corners.begin(), corners.end()}) == Partition::parse("8,5,3,2,1"));
    CHECK_THROWS_AS(remove_cells(kExample, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(remove_cells(kExample, {{4, 2}}), DomainError);   // row 5 would be longer
    CHECK_THROWS_AS(remove_cells(kExample, {{1, 10}}), DomainError);  // outside
    // two cells of one row may go together when they end the row
    CHECK(remove_cells(kExample, {{1, 8}, {1, 9}}) == Partition::parse("7,6,4,2,2,1"));
}

TEST_CASE("containment") {
    CHECK(contains(Partition::parse("3,3"), kExample));
    CHECK(contains(kExample, kExample));
    CHECK_FALSE(contains(Partition::parse("4,4"), Partition::parse("9,3")));
    CHECK(contains(Partition(), kExample));
    CHECK_FALSE(contains(Partition::parse("1,1,1,1,1,1,1"), kExample));
}

TEST_CASE("properties over all partitions of n <= 15") {
    for (int n = 0; n <= 15; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const Partition lc = conjugate(lambda);
            REQUIRE(conjugate(lc) == lambda);
            std::multiset<int> hooks;
            std::multiset<int> hooks_conj;
            for (const auto& c : lambda.cells()) {
                const int h = hook_length(lambda, c);
                REQUIRE(h == hook_length(lc, {c.col, c.row}));
                hooks.insert(h);
                hooks_conj.insert(hook_length(lc, {c.col, c.row}));
            }
            REQUIRE(hooks == hooks_conj);

            // corners: exactly the cells with hook 1
            const auto corners = corner_cells(lambda);
            long ones = std::count(hooks.begin(), hooks.end(), 1);
            REQUIRE(static_cast<long>(corners.size()) == ones);

            // peeling all corners leaves a diagram whose corner count is at
            // least its number of distinct part lengths
            const Partition peeled = remove_cells(lambda, {corners.begin(), corners.end()});
            REQUIRE(peeled.size() == n - static_cast<int>(corners.size()));
            std::set<int> distinct(peeled.parts().begin(), peeled.parts().end());
            REQUIRE(corner_cells(peeled).size() >= distinct.size());

            REQUIRE(diagonal(lambda) == diagonal(lc));
        }
    }
}
