#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "type_vector.hpp"

namespace freemix {

// A partition of {1,...,n} into disjoint blocks. Blocks are kept sorted
// internally and ordered by their minimum element.
class set_partition {
public:
    set_partition(int ground_size, std::vector<std::vector<int>> blocks)
        : ground_size_(ground_size), blocks_(std::move(blocks)) {
        if (ground_size_ < 1) throw std::invalid_argument("set_partition: ground size must be positive");
        std::vector<char> seen(ground_size_ + 1, 0);
        for (auto& block : blocks_) {
            if (block.empty()) throw std::invalid_argument("set_partition: empty block");
            std::sort(block.begin(), block.end());
            for (int v : block) {
                if (v < 1 || v > ground_size_) throw std::invalid_argument("set_partition: element out of range");
                if (seen[v]) throw std::invalid_argument("set_partition: duplicate element");
                seen[v] = 1;
            }
        }
        for (int v = 1; v <= ground_size_; ++v)
            if (!seen[v]) throw std::invalid_argument("set_partition: element missing from all blocks");
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        block_of_.assign(ground_size_ + 1, -1);
        for (size_t b = 0; b < blocks_.size(); ++b)
            for (int v : blocks_[b]) block_of_[v] = static_cast<int>(b);
    }

    int ground_size() const { return ground_size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int index) const { return blocks_[index]; }
    int block_index_of(int element) const { return block_of_[element]; }

    std::vector<int> block_sizes() const {
        std::vector<int> sizes;
        sizes.reserve(blocks_.size());
        for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    friend bool operator==(const set_partition& x, const set_partition& y) {
        return x.ground_size_ == y.ground_size_ && x.blocks_ == y.blocks_;
    }

private:
    int ground_size_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// Stack scan: an occurrence of a block is legal only while that block is the
// innermost open one.
inline bool is_noncrossing(const set_partition& p) {
    int n = p.ground_size();
    std::vector<int> remaining(p.block_count());
    for (int b = 0; b < p.block_count(); ++b) remaining[b] = static_cast<int>(p.block(b).size());
    std::vector<int> stack;
    std::vector<char> opened(p.block_count(), 0);
    for (int v = 1; v <= n; ++v) {
        int b = p.block_index_of(v);
        if (!opened[b]) {
            opened[b] = 1;
            stack.push_back(b);
        } else if (stack.empty() || stack.back() != b) {
            return false;
        }
        if (--remaining[b] == 0) stack.pop_back();
    }
    return true;
}

inline constexpr int kEnumerationCap = 14;

// Visits every non-crossing partition of [k] exactly once, in a fixed order.
// At each position the new element either opens a fresh block or joins an
// open one; joining a non-innermost block closes everything nested above it.
inline void for_each_noncrossing(int k, const std::function<void(const set_partition&)>& visit) {
    if (k < 1) throw std::invalid_argument("for_each_noncrossing: k must be positive");
    if (k > kEnumerationCap) throw std::invalid_argument("for_each_noncrossing: k exceeds enumeration cap");

    std::vector<std::vector<int>> open;
    std::vector<std::vector<int>> closed;

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > k) {
            std::vector<std::vector<int>> blocks = closed;
            blocks.insert(blocks.end(), open.begin(), open.end());
            visit(set_partition(k, std::move(blocks)));
            return;
        }
        open.push_back({pos});
        self(self, pos + 1);
        open.pop_back();

        for (size_t depth = 0; depth < open.size(); ++depth) {
            // close the `depth` blocks nested above the one being joined
            std::vector<std::vector<int>> popped(open.end() - depth, open.end());
            open.resize(open.size() - depth);
            closed.insert(closed.end(), popped.begin(), popped.end());

            open.back().push_back(pos);
            self(self, pos + 1);
            open.back().pop_back();

            closed.resize(closed.size() - depth);
            open.insert(open.end(), popped.begin(), popped.end());
        }
    };
    rec(rec, 1);
}

inline std::vector<set_partition> enumerate_noncrossing(int k) {
    std::vector<set_partition> out;
    for_each_noncrossing(k, [&](const set_partition& p) { out.push_back(p); });
    return out;
}

inline partition_type type_of(const set_partition& p) {
    std::vector<long long> counts(p.ground_size(), 0);
    for (const auto& block : p.blocks()) ++counts[block.size() - 1];
    return partition_type(std::move(counts));
}

// Kreweras complement via the cycle factorization: each block acts as a
// cyclic permutation, and the complement consists of the cycles of
// pi^{-1} . gamma where gamma is the long cycle 1 -> 2 -> ... -> k -> 1.
inline set_partition kreweras_complement(const set_partition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("kreweras_complement: partition is crossing");
    int k = p.ground_size();
    std::vector<int> pi_inv(k + 1);
    for (const auto& block : p.blocks()) {
        int t = static_cast<int>(block.size());
        for (int i = 0; i < t; ++i) {
            int from = block[i];
            int to = block[(i + 1) % t];
            pi_inv[to] = from;
        }
    }
    std::vector<char> visited(k + 1, 0);
    std::vector<std::vector<int>> blocks;
    for (int start = 1; start <= k; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int v = start;
        while (!visited[v]) {
            visited[v] = 1;
            cycle.push_back(v);
            v = pi_inv[v % k + 1];
        }
        blocks.push_back(std::move(cycle));
    }
    return set_partition(k, std::move(blocks));
}

// Sizes of a quotient-cycle decomposition, tagged with the ground total.
struct cycle_multiset {
    std::vector<int> sizes;  // ascending
    int total = 0;

    friend bool operator==(const cycle_multiset&, const cycle_multiset&) = default;
};

inline cycle_multiset make_cycle_multiset(std::vector<int> sizes, int total) {
    std::sort(sizes.begin(), sizes.end());
    int sum = 0;
    for (int s : sizes) sum += s;
    if (sum != total) throw std::invalid_argument("cycle_multiset: sizes do not sum to total");
    return {std::move(sizes), total};
}

// S_p: contract each block of p on the cycle C_k and record the edge count of
// every resulting cycle. Arc j runs from j to j+1 (arc k wraps to 1); along a
// face, arriving at x continues from the cyclic predecessor of x inside its
// block.
inline cycle_multiset quotient_cycle_sizes(const set_partition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("quotient_cycle_sizes: partition is crossing");
    int k = p.ground_size();
    std::vector<int> next_arc(k + 1);
    for (int j = 1; j <= k; ++j) {
        int head = j % k + 1;
        const auto& block = p.block(p.block_index_of(head));
        auto it = std::lower_bound(block.begin(), block.end(), head);
        int pred = (it == block.begin()) ? block.back() : *(it - 1);
        next_arc[j] = pred;
    }
    std::vector<char> visited(k + 1, 0);
    std::vector<int> sizes;
    for (int start = 1; start <= k; ++start) {
        if (visited[start]) continue;
        int len = 0;
        int j = start;
        while (!visited[j]) {
            visited[j] = 1;
            ++len;
            j = next_arc[j];
        }
        sizes.push_back(len);
    }
    return make_cycle_multiset(std::move(sizes), k);
}

// Places pi on odd positions and sigma on even positions of [2k].
inline set_partition interleave_pair(const set_partition& pi, const set_partition& sigma) {
    if (pi.ground_size() != sigma.ground_size())
        throw std::invalid_argument("interleave_pair: mismatched ground sizes");
    int k = pi.ground_size();
    std::vector<std::vector<int>> blocks;
    blocks.reserve(pi.block_count() + sigma.block_count());
    for (const auto& block : pi.blocks()) {
        std::vector<int> mapped;
        mapped.reserve(block.size());
        for (int v : block) mapped.push_back(2 * v - 1);
        blocks.push_back(std::move(mapped));
    }
    for (const auto& block : sigma.blocks()) {
        std::vector<int> mapped;
        mapped.reserve(block.size());
        for (int v : block) mapped.push_back(2 * v);
        blocks.push_back(std::move(mapped));
    }
    return set_partition(2 * k, std::move(blocks));
}

// Region sizes of an admissible pair: quotient sizes of the interleaved
// partition on [2k], each of which must be even, halved.
inline cycle_multiset pair_region_sizes(const set_partition& pi, const set_partition& sigma) {
    set_partition combined = interleave_pair(pi, sigma);
    if (!is_noncrossing(combined))
        throw std::invalid_argument("pair_region_sizes: interleaved partition is crossing");
    cycle_multiset doubled = quotient_cycle_sizes(combined);
    std::vector<int> halved;
    halved.reserve(doubled.sizes.size());
    for (int s : doubled.sizes) {
        if (s % 2 != 0)
            throw std::logic_error("pair_region_sizes: odd quotient size on the doubled cycle");
        halved.push_back(s / 2);
    }
    return make_cycle_multiset(std::move(halved), pi.ground_size());
}

inline constexpr int kPairEnumerationCap = 7;

// Visits every pair (pi, sigma) with the prescribed types whose interleaving
// is non-crossing.
inline void for_each_admissible_pair(
    const partition_type& alpha, const partition_type& beta,
    const std::function<void(const set_partition&, const set_partition&)>& visit) {
    if (alpha.k() != beta.k()) throw std::invalid_argument("for_each_admissible_pair: mismatched k");
    int k = alpha.k();
    if (k > kPairEnumerationCap)
        throw std::invalid_argument("for_each_admissible_pair: k exceeds pair enumeration cap");
    std::vector<set_partition> lhs, rhs;
    for_each_noncrossing(k, [&](const set_partition& p) {
        partition_type t = type_of(p);
        if (t == alpha) lhs.push_back(p);
        if (t == beta) rhs.push_back(p);
    });
    for (const auto& pi : lhs)
        for (const auto& sigma : rhs)
            if (is_noncrossing(interleave_pair(pi, sigma))) visit(pi, sigma);
}

}  // namespace freemix
