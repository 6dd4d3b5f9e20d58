#include <catch2/catch_amalgamated.hpp>

#include "freemix/counting.hpp"

using namespace freemix;

TEST_CASE("counts by type against enumeration") {
    CHECK(count_nc_by_type(type_from_sizes(5, {1, 1, 1, 1, 1})) == 1);
    CHECK(count_nc_by_type(type_from_sizes(4, {2, 1, 1})) == 6);
    CHECK(count_nc_by_type(type_from_sizes(6, {6})) == 1);
    for (int k = 1; k <= 7; ++k)
        for (const auto& alpha : all_type_vectors(k))
            CHECK(count_nc_by_type(alpha) == count_nc_by_type_direct(alpha));
}

TEST_CASE("scaled counts") {
    for (const auto& alpha : all_type_vectors(4))
        CHECK(count_nc_scaled(alpha, 1) == count_nc_by_type(alpha));

    // all parts of size m+1: the Fuss-Catalan numbers
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 2; ++m) {
            std::vector<long long> counts(k, 0);
            counts[0] = k;
            partition_type alpha(std::move(counts));
            CHECK(count_nc_scaled(alpha, m + 1) == fuss_catalan(k, m));
            if ((m + 1) * k <= 8) CHECK(count_nc_scaled_direct(alpha, m + 1) == fuss_catalan(k, m));
        }

    partition_type alpha = type_from_sizes(3, {1, 2});
    CHECK(count_nc_scaled(alpha, 2) == count_nc_scaled_direct(alpha, 2));
}

TEST_CASE("generalized family counts") {
    // s = 1 reduces to the scaled count
    for (const auto& alpha : all_type_vectors(3))
        CHECK(count_np_general({alpha}, 2) == count_nc_scaled(alpha, 2));

    // s = 2, m = 2: the count equals the number of admissible interleaved pairs
    for (const auto& alpha : all_type_vectors(3))
        for (const auto& beta : all_type_vectors(3)) {
            bigint pair_count = 0;
            for_each_admissible_pair(alpha, beta,
                                     [&](const set_partition&, const set_partition&) { ++pair_count; });
            CHECK(count_np_general({alpha, beta}, 2) == pair_count);
            CHECK(count_np_general_direct({alpha, beta}, 2) == pair_count);
        }

    partition_type twos = type_from_sizes(2, {1, 1});
    CHECK(count_np_general({twos, twos}, 3) == count_np_general_direct({twos, twos}, 3));

    CHECK_THROWS_AS(count_np_general({twos, twos, twos}, 2), std::invalid_argument);
}

TEST_CASE("anchored c-gon counts") {
    partition_type alpha = type_from_sizes(3, {1, 2});
    for (int c = 1; c <= 3; ++c)
        CHECK(count_np_general_cgon({alpha}, 1, c) == count_np_general_cgon_direct({alpha}, 1, c));

    partition_type twos = type_from_sizes(2, {1, 1});
    for (int c = 1; c <= 2; ++c)
        CHECK(count_np_general_cgon({twos, twos}, 2, c) ==
              count_np_general_cgon_direct({twos, twos}, 2, c));

    // degenerate block totals make the binomial vanish
    partition_type full(std::vector<long long>{0, 0, 1});
    CHECK(count_np_general_cgon({full, full}, 2, 3) == 0);

    CHECK_THROWS_AS(count_np_general_cgon({alpha}, 1, 4), std::invalid_argument);
}

TEST_CASE("labeled counts") {
    // all singletons with X = {k}: k!
    CHECK(labeled_count_ax(type_from_sizes(4, {1, 1, 1, 1}), make_cycle_multiset({4}, 4)) == 24);
    // one full block with X = {1,...,1}: k!
    CHECK(labeled_count_ax(type_from_sizes(4, {4}), make_cycle_multiset({1, 1, 1, 1}, 4)) == 24);
    // a point and two lines on [5]
    CHECK(labeled_count_ax(type_from_sizes(5, {1, 2, 2}), make_cycle_multiset({1, 1, 3}, 5)) == 20);

    CHECK_THROWS_AS(labeled_count_ax(type_from_sizes(4, {4}), make_cycle_multiset({2, 2}, 4)),
                    std::invalid_argument);
}

TEST_CASE("labeled count reconstruction matches enumeration") {
    for (int k = 1; k <= 6; ++k)
        for (const auto& alpha : all_type_vectors(k)) {
            int p = k - static_cast<int>(alpha.block_count()) + 1;
            for (const auto& sizes : part_size_multisets(k, p)) {
                cycle_multiset x = make_cycle_multiset(sizes, k);
                CHECK(count_nc_with_region_sizes(alpha, x) ==
                      count_nc_with_region_sizes_direct(alpha, x));
            }
        }
}

TEST_CASE("pair labeled counts") {
    partition_type single1 = type_from_sizes(1, {1});
    CHECK(labeled_count_ax_pair(single1, single1, make_cycle_multiset({1}, 1)) == 1);

    partition_type singles2 = type_from_sizes(2, {1, 1});
    CHECK(labeled_count_ax_pair(singles2, singles2, make_cycle_multiset({2}, 2)) == 4);

    CHECK_THROWS_AS(labeled_count_ax_pair(singles2, singles2, make_cycle_multiset({1, 1}, 2)),
                    std::invalid_argument);

    for (int k = 1; k <= 5; ++k) {
        auto types = all_type_vectors(k);
        for (const auto& alpha : types)
            for (const auto& beta : types) {
                int p = 2 * k - static_cast<int>(alpha.block_count() + beta.block_count()) + 1;
                for (const auto& sizes : part_size_multisets(k, p)) {
                    cycle_multiset x = make_cycle_multiset(sizes, k);
                    CHECK(count_pairs_with_region_sizes(alpha, beta, x) ==
                          count_pairs_with_region_sizes_direct(alpha, beta, x));
                }
            }
    }
}
