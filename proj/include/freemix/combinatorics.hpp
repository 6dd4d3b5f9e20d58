#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "rational.hpp"

namespace freemix {

namespace detail {

// Shared factorial table. Lookups below the cap hit the table; larger
// arguments are computed on the fly without being cached.
class factorial_table {
public:
    static factorial_table& instance() {
        static factorial_table t;
        return t;
    }

    bigint get(unsigned n) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (n < values_.size()) return values_[n];
            if (n <= cap_) {
                while (values_.size() <= n)
                    values_.push_back(values_.back() * bigint(values_.size()));
                return values_[n];
            }
        }
        bigint r = get(cap_);
        for (unsigned i = cap_ + 1; i <= n; ++i) r *= i;
        return r;
    }

    void set_cap(unsigned cap) {
        std::lock_guard<std::mutex> lock(mutex_);
        cap_ = cap;
        if (values_.size() > cap_ + 1) values_.resize(cap_ + 1);
    }

private:
    factorial_table() : values_{1} {}
    std::mutex mutex_;
    std::vector<bigint> values_;
    unsigned cap_ = 512;
};

}  // namespace detail

inline bigint factorial(unsigned n) { return detail::factorial_table::instance().get(n); }

inline void set_factorial_cache_limit(unsigned cap) {
    detail::factorial_table::instance().set_cap(cap);
}

// n >= 0 required. Out-of-range r yields 0 so that sums over a full index
// range truncate to their support automatically.
inline bigint binomial(long long n, long long r) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    bigint result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= (n - r + i);
        result /= i;
    }
    return result;
}

inline bigint catalan(unsigned n) { return binomial(2LL * n, n) / bigint(n + 1); }

// C(k,m) = binom((m+1)k, k) / (mk+1); C(k,1) is the k-th Catalan number.
inline bigint fuss_catalan(unsigned k, unsigned m) {
    bigint num = binomial(static_cast<long long>(m + 1) * k, k);
    return num / bigint(static_cast<unsigned long long>(m) * k + 1);
}

// perm(X): permutations of a multiset, p!/prod(multiplicities!).
inline bigint multiset_permutations(const std::vector<long long>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("multiset_permutations: empty multiset");
    std::map<long long, unsigned> mult;
    for (long long v : sizes) ++mult[v];
    bigint result = factorial(static_cast<unsigned>(sizes.size()));
    for (const auto& [value, count] : mult) result /= factorial(count);
    return result;
}

// (x)(x-1)...(x-s+1); empty product for s = 0.
inline bigint falling_factorial(const bigint& x, unsigned s) {
    bigint result = 1;
    for (unsigned i = 0; i < s; ++i) result *= (x - i);
    return result;
}

struct identity_sides {
    bigint lhs;
    bigint rhs;
    bool equal() const { return lhs == rhs; }
};

// sum_{i=0}^{m-k} (-1)^{i+(m-k)} binom(m-i,k) binom(n,i) vs binom(n-k-1, m-k).
inline identity_sides verify_alt_binomial_1(long long n, long long m, long long k) {
    if (!(k <= m && m < n) || k < 0)
        throw std::invalid_argument("verify_alt_binomial_1 requires 0 <= k <= m < n");
    bigint lhs = 0;
    for (long long i = 0; i <= m - k; ++i)
        lhs += parity_sign(i + m - k) * binomial(m - i, k) * binomial(n, i);
    return {lhs, binomial(n - k - 1, m - k)};
}

// sum_{i=0}^{n} (-1)^{n-i} binom(m+i,k) binom(n,i) vs binom(m, k-n).
inline identity_sides verify_alt_binomial_2(long long n, long long m, long long k) {
    if (n < 0 || m < 0 || k < 0)
        throw std::invalid_argument("verify_alt_binomial_2 requires nonnegative arguments");
    bigint lhs = 0;
    for (long long i = 0; i <= n; ++i)
        lhs += parity_sign(n - i) * binomial(m + i, k) * binomial(n, i);
    return {lhs, binomial(m, k - n)};
}

// sum_{c=1}^{k} (-1)^{c+b-k-1} binom(b+c-2, k-1) binom((m-s+1)k, a_sum-(s-1)k-c)
// vs binom((m-s)k, mk-(a_sum+b)+1).
inline identity_sides verify_key_identity(long long m, long long s, long long k,
                                          long long a_sum, long long b) {
    if (!(m >= s && s >= 0)) throw std::invalid_argument("verify_key_identity requires m >= s >= 0");
    if (!(1 <= b && b <= k)) throw std::invalid_argument("verify_key_identity requires 1 <= b <= k");
    bigint lhs = 0;
    for (long long c = 1; c <= k; ++c)
        lhs += parity_sign(c + b - k - 1) * binomial(b + c - 2, k - 1) *
               binomial((m - s + 1) * k, a_sum - (s - 1) * k - c);
    return {lhs, binomial((m - s) * k, m * k - (a_sum + b) + 1)};
}

// sum over compositions i_1+...+i_k = n (i_j >= 0) of C_{i_1}...C_{i_k},
// closed form k*(2n+k-1)!/(n!(n+k)!).
inline bigint catalan_composition_sum(unsigned n, unsigned k) {
    if (k == 0) return n == 0 ? 1 : 0;
    bigrat value = bigrat(bigint(k) * factorial(2 * n + k - 1), factorial(n) * factorial(n + k));
    return to_integer(value);
}

inline bigint catalan_composition_sum_direct(unsigned n, unsigned k) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (k == 1) return catalan(n);
    bigint total = 0;
    for (unsigned i = 0; i <= n; ++i)
        total += catalan(i) * catalan_composition_sum_direct(n - i, k - 1);
    return total;
}

// sum over compositions i_1+...+i_t = k (i_j >= 1) of C(i_1,m)...C(i_t,m),
// closed form (t/k) * binom((m+1)k, k-t).
inline bigrat fuss_catalan_composition_sum(unsigned k, unsigned m, unsigned t) {
    if (t < 1 || t > k) throw std::invalid_argument("fuss_catalan_composition_sum requires 1 <= t <= k");
    return bigrat(bigint(t) * binomial(static_cast<long long>(m + 1) * k, k - t), bigint(k));
}

inline bigrat fuss_catalan_composition_sum_direct(unsigned k, unsigned m, unsigned t) {
    if (t < 1 || t > k) throw std::invalid_argument("fuss_catalan_composition_sum requires 1 <= t <= k");
    if (t == 1) return bigrat(fuss_catalan(k, m));
    bigrat total = 0;
    for (unsigned i = 1; i + (t - 1) <= k; ++i)
        total += bigrat(fuss_catalan(i, m)) * fuss_catalan_composition_sum_direct(k - i, m, t - 1);
    return total;
}

// sum over (i_1,...,i_s) in [p]^s of prod_j (x_{i_j} - n(i,j)) where n(i,j)
// counts prior picks of the same index; equals the falling factorial
// (k-p)(k-p-1)...(k-p-s+1).
inline bigint product_shift_sum(const std::vector<long long>& sizes, unsigned s) {
    long long k = 0;
    for (long long x : sizes) k += x;
    long long p = static_cast<long long>(sizes.size());
    if (static_cast<long long>(s) > k - p)
        throw std::invalid_argument("product_shift_sum requires s <= k - p");
    return falling_factorial(bigint(k - p), s);
}

inline bigint product_shift_sum_direct(const std::vector<long long>& sizes, unsigned s) {
    size_t p = sizes.size();
    bigint total = 0;
    std::vector<size_t> idx(s, 0);
    std::vector<unsigned> used(p, 0);
    // odometer over [p]^s
    while (true) {
        std::fill(used.begin(), used.end(), 0);
        bigint term = 1;
        for (unsigned j = 0; j < s; ++j) {
            ++used[idx[j]];
            term *= bigint(sizes[idx[j]]) - used[idx[j]];
        }
        total += term;
        unsigned j = 0;
        for (; j < s; ++j) {
            if (++idx[j] < p) break;
            idx[j] = 0;
        }
        if (j == s) break;
    }
    return total;
}

}  // namespace freemix
