#include "jackd/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace jackd;

namespace {

// Independent partition counter (two-variable recurrence), used as the
// oracle for the enumerator.
long long partition_count(int n) {
    std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
    return p[n][n];
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("parsing and printing round-trip") {
    CHECK(Partition::parse("10,6,3,1").parts() == std::vector<int>{10, 6, 3, 1});
    CHECK(Partition::parse("").empty());
    CHECK(P({4, 2}).to_string() == "4,2");
    CHECK(Partition().to_string() == "");
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
}

TEST_CASE("enumeration order and counts") {
    const auto empty_case = partitions_of(0);
    REQUIRE(empty_case.size() == 1);
    CHECK(empty_case[0].empty());

    const auto four = partitions_of(4);
    const std::vector<Partition> expected{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                          P({1, 1, 1, 1})};
    CHECK(four == expected);

    CHECK(partitions_of(8).size() == 22);
    for (int n = 0; n <= 14; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == partition_count(n));

    CHECK_THROWS_AS(partitions_of(5, 4), std::length_error);
}

TEST_CASE("conjugation") {
    CHECK(P({10, 6, 3, 1}).conjugate() == P({4, 3, 3, 2, 2, 2, 1, 1, 1, 1}));
    CHECK(P({5}).conjugate() == P({1, 1, 1, 1, 1}));
    CHECK(P({2, 2}).conjugate() == P({2, 2}));
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("dominance order") {
    CHECK(dominates(P({3, 1}), P({2, 2})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK_FALSE(dominates(P({2, 1, 1}), P({2, 2})));
    CHECK(dominates(P({2, 2}), P({2, 1, 1})));
    CHECK_THROWS_AS(dominates(P({2}), P({1})), std::domain_error);

    for (int n = 1; n <= 10; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all) CHECK(dominates(a, a));
        for (const auto& a : all)
            for (const auto& b : all) {
                if (a == b) continue;
                const bool both = dominates(a, b) && dominates(b, a);
                CHECK_FALSE(both);
            }
    }
    // Transitivity on a moderate size.
    const auto all = partitions_of(8);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!dominates(a, b)) continue;
            for (const auto& c : all)
                if (dominates(b, c)) CHECK(dominates(a, c));
        }
}

TEST_CASE("raising moves generate the dominance up-set") {
    CHECK(covers_up(P({2, 2})) == std::vector<Partition>{P({3, 1})});
    CHECK(covers_up(P({6})).empty());
    {
        auto moves = covers_up(P({2, 1, 1}));
        std::sort(moves.begin(), moves.end());
        std::vector<Partition> expected{P({2, 2}), P({3, 1})};
        std::sort(expected.begin(), expected.end());
        CHECK(moves == expected);
    }
    for (int n = 1; n <= 9; ++n)
        for (const Partition& mu : partitions_of(n)) {
            std::set<Partition> reach{mu};
            std::vector<Partition> frontier{mu};
            while (!frontier.empty()) {
                std::vector<Partition> next;
                for (const Partition& v : frontier)
                    for (const Partition& w : covers_up(v))
                        if (reach.insert(w).second) next.push_back(w);
                frontier = std::move(next);
            }
            for (const Partition& lam : partitions_of(n))
                CHECK(reach.count(lam) == static_cast<std::size_t>(dominates(lam, mu)));
        }
}

TEST_CASE("diagonal coordinates") {
    const FrobeniusCoords fc = frobenius(P({10, 6, 3, 1}));
    CHECK(fc.d == 3);
    CHECK(fc.a == std::vector<int>{9, 4, 0});
    CHECK(fc.b == std::vector<int>{3, 1, 0});
    const FrobeniusCoords one = frobenius(P({1}));
    CHECK(one.a == std::vector<int>{0});
    CHECK(one.b == std::vector<int>{0});
    const FrobeniusCoords sq = frobenius(P({2, 2}));
    CHECK(sq.a == std::vector<int>{1, 0});
    CHECK(sq.b == std::vector<int>{1, 0});
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(from_frobenius(frobenius(lam)) == lam);
}

TEST_CASE("boundary vertical indices") {
    CHECK(boundary_vertical_indices(P({10, 6, 3, 1})) == std::vector<int>{0, 5, 9});
    CHECK(boundary_vertical_indices(P({7})) == std::vector<int>{0});
    CHECK(boundary_vertical_indices(P({2, 2})) == std::vector<int>{0, 1});
    for (int n = 1; n <= 10; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const auto nu = boundary_vertical_indices(lam);
            REQUIRE(!nu.empty());
            CHECK(nu.front() == 0);
            for (std::size_t i = 1; i < nu.size(); ++i) CHECK(nu[i] > nu[i - 1]);
            int rows = 0;
            while (lam.part(rows + 1) >= rows) ++rows;
            CHECK(static_cast<int>(nu.size()) == rows);
        }
}

TEST_CASE("cells, arms, legs, helpers") {
    const Partition lam = P({4, 2, 1});
    CHECK(cell_in(lam, {2, 2}));
    CHECK_FALSE(cell_in(lam, {2, 3}));
    CHECK(arm(lam, {1, 1}) == 3);
    CHECK(leg(lam, {1, 1}) == 2);
    CHECK_THROWS_AS(arm(lam, {3, 2}), std::domain_error);

    CHECK(fixed_point_free(P({2, 2})));
    CHECK_FALSE(fixed_point_free(P({3, 1})));
    CHECK(fixed_point_free(Partition()));

    CHECK(double_partition(P({3, 1})) == P({6, 2}));
    CHECK(remove_first_column(P({3, 1})) == P({2}));
    CHECK(remove_last_columns(P({10, 6, 3, 1}), 1) == P({9, 6, 3, 1}));
    CHECK(remove_last_columns(P({3, 2}), 2) == P({1, 1}));
    CHECK(remove_last_columns(P({3, 2}), 3).empty());
    CHECK(contains(P({3, 2}), P({2, 2})));
    CHECK_FALSE(contains(P({3, 2}), P({1, 1, 1})));
}
