#pragma once

#include <map>
#include <optional>

#include "set_partition.hpp"

namespace freemix {

// |NP(alpha)| = binom(k, a-1) (a-1)! / prod alpha_i!
inline bigint count_nc_by_type(const partition_type& alpha) {
    long long a = alpha.block_count();
    bigrat value = bigrat(binomial(alpha.k(), a - 1) * factorial(static_cast<unsigned>(a - 1)),
                          alpha.count_factorial_product());
    return to_integer(value);
}

inline bigint count_nc_by_type_direct(const partition_type& alpha) {
    bigint count = 0;
    for_each_noncrossing(alpha.k(), [&](const set_partition& p) {
        if (type_of(p) == alpha) ++count;
    });
    return count;
}

// |NP(m*alpha)|: non-crossing partitions of [mk] with alpha_i blocks of size m*i.
inline bigint count_nc_scaled(const partition_type& alpha, int m) {
    if (m < 1) throw std::invalid_argument("count_nc_scaled: m must be positive");
    long long a = alpha.block_count();
    bigrat value =
        bigrat(binomial(static_cast<long long>(m) * alpha.k(), a - 1) * factorial(static_cast<unsigned>(a - 1)),
               alpha.count_factorial_product());
    return to_integer(value);
}

inline bigint count_nc_scaled_direct(const partition_type& alpha, int m) {
    int k = alpha.k();
    bigint count = 0;
    for_each_noncrossing(m * k, [&](const set_partition& p) {
        std::vector<long long> counts(k, 0);
        for (const auto& block : p.blocks()) {
            int size = static_cast<int>(block.size());
            if (size % m != 0 || size / m > k) return;
            ++counts[size / m - 1];
        }
        if (counts == alpha.counts()) ++count;
    });
    return count;
}

// C_m(alpha_1,...,alpha_s) =
//   binom((m-s+1)k, mk - sum a_i + 1) * k^{s-1} * prod (a_i-1)!/prod alpha_ij!
inline bigint count_np_general(const std::vector<partition_type>& alphas, int m) {
    if (alphas.empty()) throw std::invalid_argument("count_np_general: need at least one type vector");
    int s = static_cast<int>(alphas.size());
    if (s > m) throw std::invalid_argument("count_np_general: requires s <= m");
    int k = alphas.front().k();
    long long a_sum = 0;
    bigrat value = 1;
    for (const auto& alpha : alphas) {
        if (alpha.k() != k) throw std::invalid_argument("count_np_general: mismatched k");
        long long a = alpha.block_count();
        a_sum += a;
        value *= bigrat(factorial(static_cast<unsigned>(a - 1)), alpha.count_factorial_product());
    }
    value *= bigrat(binomial(static_cast<long long>(m - s + 1) * k,
                             static_cast<long long>(m) * k - a_sum + 1));
    for (int i = 1; i < s; ++i) value *= k;
    return to_integer(value);
}

// c-gon variant: the extra 2c-polygon is anchored at the last cycle position.
inline bigint count_np_general_cgon(const std::vector<partition_type>& alphas, int m, int c) {
    if (alphas.empty()) throw std::invalid_argument("count_np_general_cgon: need at least one type vector");
    int s = static_cast<int>(alphas.size());
    if (s > m) throw std::invalid_argument("count_np_general_cgon: requires s <= m");
    int k = alphas.front().k();
    if (c < 1 || c > k) throw std::invalid_argument("count_np_general_cgon: requires 1 <= c <= k");
    long long a_sum = 0;
    bigrat value = 1;
    for (const auto& alpha : alphas) {
        if (alpha.k() != k) throw std::invalid_argument("count_np_general_cgon: mismatched k");
        long long a = alpha.block_count();
        a_sum += a;
        value *= bigrat(factorial(static_cast<unsigned>(a - 1)), alpha.count_factorial_product());
    }
    value *= c;
    value *= bigrat(binomial(static_cast<long long>(m - s + 1) * k,
                             static_cast<long long>(m) * k - a_sum + c));
    for (int i = 1; i < s; ++i) value *= k;
    return to_integer(value);
}

namespace detail {

// Residue classes of the ground set [mk] for NP_m(alpha_1,...,alpha_s), with
// scales (m-s+1, 1, ..., 1): group 1 takes the first m-s+1 positions of each
// window of m, group t >= 2 takes the following single positions.
inline std::vector<int> np_general_residue_groups(int m, int s, int k) {
    std::vector<int> group(m * k + 1, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= m - s + 1; ++j) group[m * i + j] = 1;
        for (int t = 2; t <= s; ++t) group[m * i + (m - s + t)] = t;
    }
    return group;
}

// Classifies P against the residue structure: every block must live inside
// one group; returns per-group type vectors (group 1 sizes divided by the
// scale) or nullopt if the partition does not fit.
inline std::optional<std::vector<partition_type>> classify_np_general(
    const set_partition& p, const std::vector<int>& group, int m, int s, int k) {
    std::vector<std::vector<int>> sizes(s + 1);
    for (const auto& block : p.blocks()) {
        int g = group[block.front()];
        for (int v : block)
            if (group[v] != g) return std::nullopt;
        sizes[g].push_back(static_cast<int>(block.size()));
    }
    int scale = m - s + 1;
    std::vector<partition_type> types;
    types.reserve(s);
    for (int t = 1; t <= s; ++t) {
        std::vector<int> reduced;
        reduced.reserve(sizes[t].size());
        for (int size : sizes[t]) {
            if (t == 1) {
                if (size % scale != 0 || size / scale > k) return std::nullopt;
                reduced.push_back(size / scale);
            } else {
                if (size > k) return std::nullopt;
                reduced.push_back(size);
            }
        }
        types.push_back(type_from_sizes(k, reduced));
    }
    return types;
}

}  // namespace detail

// Enumerative count of NP_m(alpha_1,...,alpha_s) over NC(mk).
inline bigint count_np_general_direct(const std::vector<partition_type>& alphas, int m) {
    int s = static_cast<int>(alphas.size());
    if (s > m) throw std::invalid_argument("count_np_general_direct: requires s <= m");
    int k = alphas.front().k();
    auto group = detail::np_general_residue_groups(m, s, k);
    bigint count = 0;
    for_each_noncrossing(m * k, [&](const set_partition& p) {
        auto types = detail::classify_np_general(p, group, m, s, k);
        if (!types) return;
        for (int t = 0; t < s; ++t)
            if (!((*types)[t] == alphas[t])) return;
        ++count;
    });
    return count;
}

// Enumerative count of the anchored c-gon family, realized inside
// NP_{m+1}(alpha_1,...,alpha_s, type(O_2^{k-c} O_2c)) with the block covering
// the last position required to have size c.
inline bigint count_np_general_cgon_direct(const std::vector<partition_type>& alphas, int m, int c) {
    int s = static_cast<int>(alphas.size());
    if (s > m) throw std::invalid_argument("count_np_general_cgon_direct: requires s <= m");
    int k = alphas.front().k();
    if (c < 1 || c > k) throw std::invalid_argument("count_np_general_cgon_direct: requires 1 <= c <= k");

    std::vector<long long> extra_counts(k, 0);
    extra_counts[0] = k - c;
    extra_counts[c - 1] += 1;
    partition_type extra(std::move(extra_counts));

    int mm = m + 1;
    int ss = s + 1;
    auto group = detail::np_general_residue_groups(mm, ss, k);
    int anchor = mm * k;
    bigint count = 0;
    for_each_noncrossing(mm * k, [&](const set_partition& p) {
        if (static_cast<int>(p.block(p.block_index_of(anchor)).size()) != c) return;
        auto types = detail::classify_np_general(p, group, mm, ss, k);
        if (!types) return;
        for (int t = 0; t < s; ++t)
            if (!((*types)[t] == alphas[t])) return;
        if (!((*types)[s] == extra)) return;
        ++count;
    });
    return count;
}

// |NPL_{A,X}(alpha, X)| = k (p-1)! (a-1)! with p = k - a + 1 parts.
inline bigint labeled_count_ax(const partition_type& alpha, const cycle_multiset& x) {
    long long k = alpha.k();
    long long a = alpha.block_count();
    long long p = k - a + 1;
    if (static_cast<long long>(x.sizes.size()) != p || x.total != k)
        throw std::invalid_argument("labeled_count_ax: X must have k-a+1 parts summing to k");
    return bigint(k) * factorial(static_cast<unsigned>(p - 1)) * factorial(static_cast<unsigned>(a - 1));
}

// Pair version: k^2 (p-1)! (a-1)! (b-1)! with p = 2k - a - b + 1 parts.
inline bigint labeled_count_ax_pair(const partition_type& alpha, const partition_type& beta,
                                    const cycle_multiset& x) {
    if (alpha.k() != beta.k()) throw std::invalid_argument("labeled_count_ax_pair: mismatched k");
    long long k = alpha.k();
    long long a = alpha.block_count();
    long long b = beta.block_count();
    long long p = 2 * k - a - b + 1;
    if (static_cast<long long>(x.sizes.size()) != p || x.total != k)
        throw std::invalid_argument("labeled_count_ax_pair: X must have 2k-a-b+1 parts summing to k");
    return bigint(k) * k * factorial(static_cast<unsigned>(p - 1)) *
           factorial(static_cast<unsigned>(a - 1)) * factorial(static_cast<unsigned>(b - 1));
}

// |NP(alpha, X)| by enumeration: partitions with type alpha and S_pi = X.
inline bigint count_nc_with_region_sizes_direct(const partition_type& alpha, const cycle_multiset& x) {
    bigint count = 0;
    for_each_noncrossing(alpha.k(), [&](const set_partition& p) {
        if (type_of(p) == alpha && quotient_cycle_sizes(p) == x) ++count;
    });
    return count;
}

// |NP(alpha, X)| reconstructed from the labeled closed form:
// labeled_count_ax * perm(X) / (p! prod alpha_i!).
inline bigint count_nc_with_region_sizes(const partition_type& alpha, const cycle_multiset& x) {
    std::vector<long long> parts(x.sizes.begin(), x.sizes.end());
    bigrat value = bigrat(labeled_count_ax(alpha, x) * multiset_permutations(parts),
                          factorial(static_cast<unsigned>(x.sizes.size())) * alpha.count_factorial_product());
    return to_integer(value);
}

// Pair analogues, |NP(alpha, beta, X)| over admissible pairs.
inline bigint count_pairs_with_region_sizes_direct(const partition_type& alpha,
                                                   const partition_type& beta,
                                                   const cycle_multiset& x) {
    bigint count = 0;
    for_each_admissible_pair(alpha, beta, [&](const set_partition& pi, const set_partition& sigma) {
        if (pair_region_sizes(pi, sigma) == x) ++count;
    });
    return count;
}

inline bigint count_pairs_with_region_sizes(const partition_type& alpha, const partition_type& beta,
                                            const cycle_multiset& x) {
    std::vector<long long> parts(x.sizes.begin(), x.sizes.end());
    bigrat value =
        bigrat(labeled_count_ax_pair(alpha, beta, x) * multiset_permutations(parts),
               factorial(static_cast<unsigned>(x.sizes.size())) * alpha.count_factorial_product() *
                   beta.count_factorial_product());
    return to_integer(value);
}

}  // namespace freemix
