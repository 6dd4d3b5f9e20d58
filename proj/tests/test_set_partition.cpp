#include <catch2/catch_amalgamated.hpp>

#include "freemix/set_partition.hpp"

using namespace freemix;

TEST_CASE("set_partition validation") {
    CHECK_THROWS_AS(set_partition(3, {{1, 2}}), std::invalid_argument);          // missing 3
    CHECK_THROWS_AS(set_partition(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(set_partition(3, {{1, 2, 3, 4}}), std::invalid_argument);    // out of range
    set_partition p(4, {{4}, {2, 1}, {3}});
    CHECK(p.blocks()[0] == std::vector<int>{1, 2});  // canonical order
    CHECK(p.block_index_of(3) == 1);
}

TEST_CASE("is_noncrossing") {
    CHECK_FALSE(is_noncrossing(set_partition(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(set_partition(8, {{2}, {4}, {6}, {1, 3}, {5, 7, 8}})));
    CHECK(is_noncrossing(set_partition(5, {{1}, {2}, {3}, {4}, {5}})));
    CHECK(is_noncrossing(set_partition(4, {{1, 4}, {2, 3}})));
    CHECK_FALSE(is_noncrossing(set_partition(6, {{1, 4}, {2, 5}, {3, 6}})));
}

TEST_CASE("noncrossing enumeration") {
    CHECK(enumerate_noncrossing(3).size() == 5);
    auto single = enumerate_noncrossing(1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == set_partition(1, {{1}}));

    auto all4 = enumerate_noncrossing(4);
    CHECK(all4.size() == 14);
    int pairs_and_singletons = 0;
    for (const auto& p : all4)
        if (type_of(p) == type_from_sizes(4, {2, 1, 1})) ++pairs_and_singletons;
    CHECK(pairs_and_singletons == 6);

    for (int k = 1; k <= 8; ++k)
        CHECK(bigint(enumerate_noncrossing(k).size()) == catalan(k));

    // order is deterministic
    CHECK(enumerate_noncrossing(5) == enumerate_noncrossing(5));
    CHECK_THROWS_AS(enumerate_noncrossing(15), std::invalid_argument);
}

TEST_CASE("type vectors of partitions") {
    CHECK(type_of(set_partition(4, {{1, 3}, {2}, {4}})) == type_from_sizes(4, {2, 1, 1}));
    CHECK(type_of(set_partition(5, {{1, 2, 3, 4, 5}})) == type_from_sizes(5, {5}));
    CHECK(type_of(set_partition(8, {{2}, {4}, {6}, {1, 3}, {5, 7, 8}})) ==
          type_from_sizes(8, {1, 1, 1, 2, 3}));
}

TEST_CASE("kreweras complement") {
    set_partition singletons(5, {{1}, {2}, {3}, {4}, {5}});
    CHECK(kreweras_complement(singletons) == set_partition(5, {{1, 2, 3, 4, 5}}));
    CHECK(kreweras_complement(set_partition(5, {{1, 2, 3, 4, 5}})) == singletons);
    CHECK(kreweras_complement(set_partition(4, {{1, 3}, {2}, {4}})) ==
          set_partition(4, {{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(kreweras_complement(set_partition(4, {{1, 3}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("kreweras complement is the coarsest compatible partition") {
    // brute force: among all sigma with pi-on-odds, sigma-on-evens noncrossing,
    // the complement has the fewest blocks, uniquely
    for (int k = 1; k <= 6; ++k) {
        auto all = enumerate_noncrossing(k);
        for (const auto& pi : all) {
            set_partition complement = kreweras_complement(pi);
            CHECK(is_noncrossing(interleave_pair(pi, complement)));
            int best = complement.block_count();
            int with_best = 0;
            for (const auto& sigma : all) {
                if (!is_noncrossing(interleave_pair(pi, sigma))) continue;
                CHECK(sigma.block_count() >= best);
                if (sigma.block_count() == best) ++with_best;
            }
            CHECK(with_best == 1);
            CHECK(pi.block_count() + complement.block_count() == k + 1);
        }
    }
}

TEST_CASE("quotient cycle sizes") {
    set_partition fig(8, {{2}, {4}, {6}, {1, 3}, {5, 7, 8}});
    CHECK(quotient_cycle_sizes(fig) == make_cycle_multiset({1, 2, 3, 2}, 8));

    CHECK(quotient_cycle_sizes(set_partition(6, {{1}, {2}, {3}, {4}, {5}, {6}})) ==
          make_cycle_multiset({6}, 6));
    CHECK(quotient_cycle_sizes(set_partition(4, {{1, 2, 3, 4}})) ==
          make_cycle_multiset({1, 1, 1, 1}, 4));
    CHECK_THROWS_AS(quotient_cycle_sizes(set_partition(4, {{1, 3}, {2, 4}})),
                    std::invalid_argument);
}

TEST_CASE("interleaving pairs") {
    set_partition pair2(2, {{1, 2}});
    set_partition single2(2, {{1}, {2}});
    CHECK(interleave_pair(pair2, single2) == set_partition(4, {{1, 3}, {2}, {4}}));
    CHECK(is_noncrossing(interleave_pair(pair2, single2)));
    CHECK(interleave_pair(pair2, pair2) == set_partition(4, {{1, 3}, {2, 4}}));
    CHECK_FALSE(is_noncrossing(interleave_pair(pair2, pair2)));
    CHECK(interleave_pair(single2, single2) == set_partition(4, {{1}, {2}, {3}, {4}}));
}

TEST_CASE("pair region sizes") {
    set_partition pair2(2, {{1, 2}});
    set_partition single2(2, {{1}, {2}});
    CHECK(pair_region_sizes(pair2, single2) == make_cycle_multiset({1, 1}, 2));
    CHECK(pair_region_sizes(single2, single2) == make_cycle_multiset({2}, 2));
    set_partition one(1, {{1}});
    CHECK(pair_region_sizes(one, one) == make_cycle_multiset({1}, 1));
    CHECK_THROWS_AS(pair_region_sizes(pair2, pair2), std::invalid_argument);
}

TEST_CASE("region sizes of admissible pairs are halved even quotients") {
    for (int k = 1; k <= 6; ++k) {
        auto all = enumerate_noncrossing(k);
        for (const auto& pi : all)
            for (const auto& sigma : all) {
                if (!is_noncrossing(interleave_pair(pi, sigma))) continue;
                cycle_multiset regions = pair_region_sizes(pi, sigma);  // throws if any size is odd
                long long a = pi.block_count();
                long long b = sigma.block_count();
                CHECK(static_cast<long long>(regions.sizes.size()) == 2 * k - a - b + 1);
                CHECK(regions.total == k);
            }
    }
}

TEST_CASE("admissible pair enumeration by type") {
    int count = 0;
    for_each_admissible_pair(type_from_sizes(2, {2}), type_from_sizes(2, {2}),
                             [&](const set_partition&, const set_partition&) { ++count; });
    CHECK(count == 0);  // the two full blocks cross

    count = 0;
    for_each_admissible_pair(type_from_sizes(1, {1}), type_from_sizes(1, {1}),
                             [&](const set_partition&, const set_partition&) { ++count; });
    CHECK(count == 1);

    count = 0;
    for_each_admissible_pair(type_from_sizes(2, {2}), type_from_sizes(2, {1, 1}),
                             [&](const set_partition&, const set_partition&) { ++count; });
    CHECK(count == 1);
}
