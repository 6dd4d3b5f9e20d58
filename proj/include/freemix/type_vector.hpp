#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"

namespace freemix {

// Block-size profile of a partition of [k]: counts[i-1] blocks of size i,
// with sum i*counts[i-1] = k.
class partition_type {
public:
    explicit partition_type(std::vector<long long> counts) : counts_(std::move(counts)) {
        long long weighted = 0;
        for (size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] < 0) throw std::invalid_argument("partition_type: negative count");
            weighted += static_cast<long long>(i + 1) * counts_[i];
        }
        if (weighted != static_cast<long long>(counts_.size()))
            throw std::invalid_argument("partition_type: sum of i*counts[i] must equal k");
    }

    int k() const { return static_cast<int>(counts_.size()); }

    // number of blocks, a = sum of counts
    long long block_count() const {
        return std::accumulate(counts_.begin(), counts_.end(), 0LL);
    }

    long long count(int size) const {
        return (size >= 1 && size <= k()) ? counts_[size - 1] : 0;
    }

    const std::vector<long long>& counts() const { return counts_; }

    // prod_i counts[i]!
    bigint count_factorial_product() const {
        bigint r = 1;
        for (long long c : counts_) r *= factorial(static_cast<unsigned>(c));
        return r;
    }

    friend bool operator==(const partition_type&, const partition_type&) = default;
    friend auto operator<=>(const partition_type& x, const partition_type& y) {
        return x.counts_ <=> y.counts_;
    }

private:
    std::vector<long long> counts_;
};

// From a multiset of block sizes over ground k.
inline partition_type type_from_sizes(int k, const std::vector<int>& sizes) {
    std::vector<long long> counts(k, 0);
    for (int s : sizes) {
        if (s < 1 || s > k) throw std::invalid_argument("type_from_sizes: size out of range");
        ++counts[s - 1];
    }
    return partition_type(std::move(counts));
}

// All type vectors over [k] (one per integer partition of k). Order is
// deterministic: largest parts first.
inline std::vector<partition_type> all_type_vectors(int k) {
    std::vector<partition_type> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(type_from_sizes(k, parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

// Multisets of exactly p positive parts summing to total (ascending parts),
// used to range over quotient-size data.
inline std::vector<std::vector<int>> part_size_multisets(int total, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int slots, int min_part) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back(parts);
            return;
        }
        for (int v = min_part; v * slots <= remaining; ++v) {
            parts.push_back(v);
            self(self, remaining - v, slots - 1, v);
            parts.pop_back();
        }
    };
    rec(rec, total, p, 1);
    return out;
}

}  // namespace freemix
