#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "paxis/partition.hpp"
#include "paxis/verify.hpp"

using paxis::CornerKind;
using paxis::Partition;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Transpose by listing every Ferrers cell (i, j) and swapping coordinates.
Partition transpose_cells(const Partition& lambda) {
    std::set<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) cells.insert({j, i});
    }
    std::vector<int> rows;
    for (auto [r, c] : cells) {
        if (static_cast<std::size_t>(r) >= rows.size()) rows.resize(static_cast<std::size_t>(r) + 1, 0);
        ++rows[static_cast<std::size_t>(r)];
    }
    return Partition(rows);
}

// Every ordered (donor, receiver) pair with receiver possibly a new part.
std::set<Partition> transfers_brute_force(const Partition& lambda) {
    std::set<Partition> out;
    const auto& parts = lambda.parts();
    const std::size_t len = parts.size();
    for (std::size_t from = 0; from < len; ++from) {
        for (std::size_t to = 0; to <= len; ++to) {
            if (from == to) continue;
            std::vector<int> next(parts);
            next.push_back(0);
            next[from] -= 1;
            next[to] += 1;
            std::vector<int> kept;
            for (int x : next) {
                if (x > 0) kept.push_back(x);
            }
            std::sort(kept.rbegin(), kept.rend());
            Partition mu(kept);
            if (mu != lambda) out.insert(mu);
        }
    }
    return out;
}

// Random partition of n: repeatedly split off a uniform part size.
Partition random_partition(int n, std::mt19937& rng) {
    std::vector<int> parts;
    int remaining = n;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick(1, remaining);
        int part = pick(rng);
        parts.push_back(part);
        remaining -= part;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

}  // namespace

TEST_CASE("partition construction validates canonical form") {
    CHECK(P({3, 2, 1}).n() == 6);
    CHECK(P({3, 2, 1}).to_string() == "3,2,1");
    CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("4,4,1") == P({4, 4, 1}));
    CHECK(Partition::parse("7") == P({7}));
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_CASE("lambda_i conventions") {
    auto lambda = P({3, 1});
    CHECK(lambda.part(0) == std::numeric_limits<int>::max());
    CHECK(lambda.part(1) == 3);
    CHECK(lambda.part(2) == 1);
    CHECK(lambda.part(3) == 0);
}

TEST_CASE("enumerate_partitions") {
    SUBCASE("n=4 in reverse-lex order") {
        auto all = paxis::enumerate_partitions(4);
        std::vector<Partition> expected{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
        CHECK(all == expected);
    }
    SUBCASE("n=1") {
        CHECK(paxis::enumerate_partitions(1) == std::vector<Partition>{P({1})});
    }
    SUBCASE("n=30 has 5604 partitions") {
        CHECK(paxis::enumerate_partitions(30).size() == 5604);
    }
    SUBCASE("counts match p(n), strictly decreasing, all sum to n") {
        for (int n = 1; n <= 30; ++n) {
            auto all = paxis::enumerate_partitions(n);
            CHECK(all.size() == paxis::partition_count(n));
            CHECK(std::is_sorted(all.rbegin(), all.rend()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            CHECK(std::all_of(all.begin(), all.end(), [n](const Partition& p) { return p.n() == n; }));
        }
    }
    SUBCASE("invalid n") {
        CHECK_THROWS_AS(paxis::enumerate_partitions(0), std::invalid_argument);
        CHECK_THROWS_AS(paxis::enumerate_partitions(-3), std::invalid_argument);
    }
}

TEST_CASE("conjugate") {
    CHECK(paxis::conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(paxis::conjugate(P({2, 2})) == P({2, 2}));
    CHECK(transpose_cells(P({4, 3, 1})) == P({3, 2, 2, 1}));
    CHECK(paxis::conjugate(P({4, 3, 1})) == P({3, 2, 2, 1}));

    for (int n = 1; n <= 16; ++n) {
        for (const auto& lambda : paxis::enumerate_partitions(n)) {
            REQUIRE(paxis::conjugate(lambda) == transpose_cells(lambda));
            REQUIRE(paxis::conjugate(paxis::conjugate(lambda)) == lambda);
        }
    }
}

TEST_CASE("is_self_conjugate") {
    CHECK(paxis::is_self_conjugate(P({1})));
    CHECK_FALSE(paxis::is_self_conjugate(P({2})));
    CHECK_FALSE(paxis::is_self_conjugate(P({3, 1, 1, 1})));
    CHECK_FALSE(paxis::is_self_conjugate(P({4, 1, 1})));
    CHECK(paxis::is_self_conjugate(P({3, 2, 1})));
    CHECK(paxis::is_self_conjugate(P({3, 1, 1})));
}

TEST_CASE("corners") {
    SUBCASE("(2,2): single removable corner, on the diagonal") {
        auto cs = paxis::corners(P({2, 2}));
        std::vector<paxis::Corner> removable;
        std::copy_if(cs.begin(), cs.end(), std::back_inserter(removable),
                     [](const paxis::Corner& c) { return c.kind == CornerKind::removable; });
        REQUIRE(removable.size() == 1);
        CHECK(removable[0] == paxis::Corner{2, 2, CornerKind::removable, true});
        CHECK(paxis::has_removable_diagonal_corner(P({2, 2})));
        CHECK_FALSE(paxis::has_addable_diagonal_corner(P({2, 2})));
    }
    SUBCASE("(1)") {
        std::vector<paxis::Corner> expected{
            {1, 1, CornerKind::removable, true},
            {1, 2, CornerKind::addable, false},
            {2, 1, CornerKind::addable, false},
        };
        CHECK(paxis::corners(P({1})) == expected);
    }
    SUBCASE("(2,1) has an addable diagonal corner at (2,2)") {
        CHECK(paxis::has_addable_diagonal_corner(P({2, 1})));
        CHECK_FALSE(paxis::has_removable_diagonal_corner(P({2, 1})));
    }
    SUBCASE("corners remove/add to valid partitions; diagonal predicates agree") {
        for (int n = 1; n <= 14; ++n) {
            for (const auto& lambda : paxis::enumerate_partitions(n)) {
                bool diag_removable = false;
                bool diag_addable = false;
                for (const auto& c : paxis::corners(lambda)) {
                    std::vector<int> parts = lambda.parts();
                    if (c.kind == CornerKind::removable) {
                        REQUIRE(parts[static_cast<std::size_t>(c.row - 1)] == c.col);
                        --parts[static_cast<std::size_t>(c.row - 1)];
                        std::erase(parts, 0);
                        if (!parts.empty()) CHECK(Partition(parts).n() == n - 1);
                        diag_removable |= c.diagonal;
                    } else {
                        if (static_cast<std::size_t>(c.row) > parts.size()) parts.push_back(0);
                        ++parts[static_cast<std::size_t>(c.row - 1)];
                        CHECK(Partition(parts).n() == n + 1);
                        diag_addable |= c.diagonal;
                    }
                    CHECK(c.diagonal == (c.row == c.col));
                }
                CHECK(diag_removable == paxis::has_removable_diagonal_corner(lambda));
                CHECK(diag_addable == paxis::has_addable_diagonal_corner(lambda));
            }
        }
    }
    SUBCASE("no partition of n <= 20 has both diagonal corner kinds") {
        for (int n = 1; n <= 20; ++n) {
            for (const auto& lambda : paxis::enumerate_partitions(n)) {
                REQUIRE_FALSE((paxis::has_removable_diagonal_corner(lambda) &&
                               paxis::has_addable_diagonal_corner(lambda)));
            }
        }
    }
}

TEST_CASE("transfer_neighbors") {
    CHECK(paxis::transfer_neighbors(P({1})).empty());
    CHECK(paxis::transfer_neighbors(P({2})) == std::vector<Partition>{P({1, 1})});
    CHECK(paxis::transfer_neighbors(P({1, 1})) == std::vector<Partition>{P({2})});

    auto nbrs = paxis::transfer_neighbors(P({2, 1}));
    auto brute = transfers_brute_force(P({2, 1}));
    CHECK(std::set<Partition>(nbrs.begin(), nbrs.end()) == brute);
    CHECK(brute == std::set<Partition>{P({3}), P({1, 1, 1})});

    for (int n = 1; n <= 12; ++n) {
        for (const auto& lambda : paxis::enumerate_partitions(n)) {
            auto got = paxis::transfer_neighbors(lambda);
            REQUIRE(std::set<Partition>(got.begin(), got.end()) == transfers_brute_force(lambda));
        }
    }
}

TEST_CASE("transfer relation is symmetric and commutes with conjugation (random partitions up to n=60)") {
    std::mt19937 rng(20261017);
    for (int trial = 0; trial < 400; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 60)(rng);
        auto lambda = random_partition(n, rng);
        auto conj_lambda = paxis::conjugate(lambda);
        auto conj_nbrs = paxis::transfer_neighbors(conj_lambda);
        for (const auto& mu : paxis::transfer_neighbors(lambda)) {
            auto back = paxis::transfer_neighbors(mu);
            REQUIRE(std::binary_search(back.begin(), back.end(), lambda));
            REQUIRE(std::binary_search(conj_nbrs.begin(), conj_nbrs.end(), paxis::conjugate(mu)));
        }
        REQUIRE_FALSE((paxis::has_removable_diagonal_corner(lambda) && paxis::has_addable_diagonal_corner(lambda)));
    }
}
