#pragma once

#include <string>

#include "counting.hpp"

namespace freemix {

// Even moments of a symmetric distribution: even[i-1] = Omega_{2i}. Odd
// moments are implicitly zero. Unit variance (Omega_2 = 1) is the convention
// the mixing operation assumes; other inputs are accepted but flagged.
struct moment_sequence {
    std::string label;
    std::vector<bigrat> even;
    bool variance_warning = false;

    int max_k() const { return static_cast<int>(even.size()); }

    bigrat entry(int k) const {
        if (k < 1 || k > max_k())
            throw std::invalid_argument("moment_sequence '" + label + "': insufficient moments for k=" +
                                        std::to_string(k));
        return even[k - 1];
    }

    bool unit_variance() const { return !even.empty() && even[0] == 1; }
};

// All moments m_1, m_2, ... of a (not necessarily symmetric) variable.
struct general_moment_sequence {
    std::string label;
    std::vector<bigrat> moments;

    int max_order() const { return static_cast<int>(moments.size()); }

    bigrat entry(int i) const {
        if (i < 1 || i > max_order())
            throw std::invalid_argument("general_moment_sequence '" + label +
                                        "': insufficient moments for order " + std::to_string(i));
        return moments[i - 1];
    }
};

// Moments of the square: if D has even moments Omega_{2i}, then D^2 has
// i-th moment Omega_{2i} for every i.
inline general_moment_sequence squared_lift(const moment_sequence& omega) {
    return {omega.label + "^2", omega.even};
}

// The symmetric variable itself: odd moments zero.
inline general_moment_sequence symmetric_lift(const moment_sequence& omega) {
    std::vector<bigrat> m(2 * omega.even.size(), bigrat(0));
    for (size_t i = 0; i < omega.even.size(); ++i) m[2 * i + 1] = omega.even[i];
    return {omega.label, std::move(m)};
}

// Both sign spellings in circulation, (-1)^{k+a+b-1} and (-1)^{a+b-k-1},
// have equal parity; this helper is the single source of truth.
inline int coefficient_sign(long long k, long long a, long long b) {
    return parity_sign(a + b - k - 1);
}

// prod_i Omega_{2i}^{alpha_i}
inline bigrat monomial(const moment_sequence& omega, const partition_type& alpha) {
    bigrat value = 1;
    for (int i = 1; i <= alpha.k(); ++i)
        for (long long c = 0; c < alpha.count(i); ++c) value *= omega.entry(i);
    return value;
}

inline bigrat monomial(const general_moment_sequence& seq, const partition_type& alpha) {
    bigrat value = 1;
    for (int i = 1; i <= alpha.k(); ++i)
        for (long long c = 0; c < alpha.count(i); ++c) value *= seq.entry(i);
    return value;
}

// C(alpha, beta) = (-1)^{a+b-k-1} k binom(a+b-2, k-1)
//                  (a-1)!/prod alpha_i! (b-1)!/prod beta_i!
// Vanishes whenever a + b <= k through the binomial convention.
inline bigrat coefficient(const partition_type& alpha, const partition_type& beta) {
    if (alpha.k() != beta.k()) throw std::invalid_argument("coefficient: mismatched k");
    long long k = alpha.k();
    long long a = alpha.block_count();
    long long b = beta.block_count();
    bigrat value = bigrat(bigint(k) * binomial(a + b - 2, k - 1));
    value *= bigrat(factorial(static_cast<unsigned>(a - 1)), alpha.count_factorial_product());
    value *= bigrat(factorial(static_cast<unsigned>(b - 1)), beta.count_factorial_product());
    return coefficient_sign(k, a, b) * value;
}

// sum over NP(alpha) of prod_{x in S_pi} C_{x-1}, closed form
// binom(a+k-2, k-1) (a-1)!/prod alpha_i!
inline bigrat single_catalan_sum(const partition_type& alpha) {
    long long k = alpha.k();
    long long a = alpha.block_count();
    return bigrat(binomial(a + k - 2, k - 1) * factorial(static_cast<unsigned>(a - 1)),
                  alpha.count_factorial_product());
}

inline bigrat single_catalan_sum_direct(const partition_type& alpha) {
    bigint total = 0;
    for_each_noncrossing(alpha.k(), [&](const set_partition& p) {
        if (!(type_of(p) == alpha)) return;
        bigint term = 1;
        for (int x : quotient_cycle_sizes(p).sizes) term *= catalan(x - 1);
        total += term;
    });
    return bigrat(total);
}

// sum over NP(alpha, beta) of prod_{x in S_{pi+sigma}} C_{x-1}, closed form
// k binom(a+b-2, k-1) (a-1)!/prod alpha! (b-1)!/prod beta!
inline bigrat pair_catalan_sum(const partition_type& alpha, const partition_type& beta) {
    if (alpha.k() != beta.k()) throw std::invalid_argument("pair_catalan_sum: mismatched k");
    long long k = alpha.k();
    long long a = alpha.block_count();
    long long b = beta.block_count();
    bigrat value = bigrat(bigint(k) * binomial(a + b - 2, k - 1));
    value *= bigrat(factorial(static_cast<unsigned>(a - 1)), alpha.count_factorial_product());
    value *= bigrat(factorial(static_cast<unsigned>(b - 1)), beta.count_factorial_product());
    return value;
}

inline bigrat pair_catalan_sum_direct(const partition_type& alpha, const partition_type& beta) {
    bigint total = 0;
    for_each_admissible_pair(alpha, beta, [&](const set_partition& pi, const set_partition& sigma) {
        bigint term = 1;
        for (int x : pair_region_sizes(pi, sigma).sizes) term *= catalan(x - 1);
        total += term;
    });
    return bigrat(total);
}

// phi((ab)^K) for K = 1..k_max via the direct coefficient formula:
// sum over alpha, beta in P_K of C(alpha,beta) prod phi(a^i)^alpha_i prod phi(b^i)^beta_i.
inline std::vector<bigrat> free_product_moments(const general_moment_sequence& a,
                                                const general_moment_sequence& b, int k_max) {
    std::vector<bigrat> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        auto types = all_type_vectors(k);
        bigrat sum = 0;
        for (const auto& alpha : types) {
            bigrat ma = monomial(a, alpha);
            if (ma == 0) continue;
            for (const auto& beta : types) sum += coefficient(alpha, beta) * ma * monomial(b, beta);
        }
        out.push_back(sum);
    }
    return out;
}

inline constexpr int kCumulantOracleCap = 9;

// Free cumulants from moments by inverting m_n = sum over NC(n) of
// prod_B kappa_{|B|}: only the one-block partition contributes kappa_n.
inline std::vector<bigrat> free_cumulants(const general_moment_sequence& a, int k_max) {
    if (k_max > kCumulantOracleCap)
        throw std::invalid_argument("free_cumulants: k_max exceeds enumeration cap");
    std::vector<bigrat> kappa(k_max + 1, bigrat(0));
    for (int n = 1; n <= k_max; ++n) {
        bigrat lower = 0;
        for_each_noncrossing(n, [&](const set_partition& p) {
            if (p.block_count() == 1) return;
            bigrat term = 1;
            for (const auto& block : p.blocks()) term *= kappa[block.size()];
            lower += term;
        });
        kappa[n] = a.entry(n) - lower;
    }
    return kappa;
}

// Independent route to phi((ab)^k): the mixed-moment expansion
// phi((ab)^k) = sum over NC(k) of kappa_pi[a] phi_{K(pi)}[b].
inline std::vector<bigrat> cumulant_oracle_product_moments(const general_moment_sequence& a,
                                                           const general_moment_sequence& b,
                                                           int k_max) {
    if (k_max > kCumulantOracleCap)
        throw std::invalid_argument("cumulant_oracle_product_moments: k_max exceeds enumeration cap");
    std::vector<bigrat> kappa = free_cumulants(a, k_max);
    std::vector<bigrat> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        bigrat sum = 0;
        for_each_noncrossing(k, [&](const set_partition& p) {
            bigrat term = 1;
            for (const auto& block : p.blocks()) term *= kappa[block.size()];
            if (term == 0) return;
            set_partition complement = kreweras_complement(p);
            for (const auto& block : complement.blocks())
                term *= b.entry(static_cast<int>(block.size()));
            sum += term;
        });
        out.push_back(sum);
    }
    return out;
}

// (Omega o_R Omega')_{2k} = sum over alpha, beta in P_k of
// C(alpha,beta) Omega^alpha Omega'^beta.
inline moment_sequence op_r(const moment_sequence& omega, const moment_sequence& omega_prime,
                            int k_max) {
    moment_sequence result;
    result.label = "op_r(" + omega.label + "," + omega_prime.label + ")";
    result.variance_warning = omega.variance_warning || omega_prime.variance_warning ||
                              !omega.unit_variance() || !omega_prime.unit_variance();
    result.even.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        auto types = all_type_vectors(k);
        bigrat sum = 0;
        for (const auto& alpha : types) {
            bigrat ma = monomial(omega, alpha);
            if (ma == 0) continue;
            for (const auto& beta : types)
                sum += coefficient(alpha, beta) * ma * monomial(omega_prime, beta);
        }
        result.even.push_back(sum);
    }
    return result;
}

// Fuss-Catalan moment sequence: entry k equals C(k,m); m = 0 is all ones.
inline moment_sequence zm_moments(int m, int k_max) {
    if (m < 0) throw std::invalid_argument("zm_moments: m must be nonnegative");
    moment_sequence result;
    result.label = "zm:" + std::to_string(m);
    result.even.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) result.even.push_back(bigrat(fuss_catalan(k, m)));
    return result;
}

// Single-step closed form:
// (Z(m) o_R Omega)_{2k} = sum over alpha of binom(mk, a-1) (a-1)!/prod alpha_i! Omega^alpha.
inline moment_sequence zm_convolve_closed(int m, const moment_sequence& omega, int k_max) {
    if (m < 0) throw std::invalid_argument("zm_convolve_closed: m must be nonnegative");
    moment_sequence result;
    result.label = "zm_conv(" + std::to_string(m) + "," + omega.label + ")";
    result.variance_warning = omega.variance_warning || !omega.unit_variance();
    result.even.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        bigrat sum = 0;
        for (const auto& alpha : all_type_vectors(k)) {
            long long a = alpha.block_count();
            bigrat mono = monomial(omega, alpha);
            if (mono == 0) continue;
            sum += bigrat(binomial(static_cast<long long>(m) * k, a - 1) *
                              factorial(static_cast<unsigned>(a - 1)),
                          alpha.count_factorial_product()) *
                   mono;
        }
        result.even.push_back(sum);
    }
    return result;
}

// Mixing two Fuss-Catalan families composes the parameters:
// Z(m) o_R Z(m') has the Z(m+m') moments.
inline moment_sequence zm_compose(int m, int m_prime, int k_max) {
    moment_sequence result = zm_convolve_closed(m, zm_moments(m_prime, k_max), k_max);
    moment_sequence expected = zm_moments(m + m_prime, k_max);
    for (int k = 1; k <= k_max; ++k)
        if (result.entry(k) != expected.entry(k))
            throw std::logic_error("zm_compose: composition does not match Z(m+m') at k=" +
                                   std::to_string(k));
    result.label = "zm_compose(" + std::to_string(m) + "," + std::to_string(m_prime) + ")";
    return result;
}

// Head Z(m) followed by tail distributions, mixed left to right.
struct chain_spec {
    int m = 0;
    std::vector<moment_sequence> tails;

    int s() const { return static_cast<int>(tails.size()); }
};

// Inductive route: repeated application of the binary formula.
inline moment_sequence chain_moments_inductive(const chain_spec& chain, int k_max) {
    moment_sequence acc = zm_moments(chain.m, k_max);
    for (const auto& tail : chain.tails) acc = op_r(acc, tail, k_max);
    return acc;
}

// C_m(alpha_1,...,alpha_s) as an exact rational (k^{s-1} is 1/k at s = 0).
inline bigrat chain_coefficient(const std::vector<partition_type>& alphas, int m, int k) {
    int s = static_cast<int>(alphas.size());
    long long a_sum = 0;
    bigrat value = 1;
    for (const auto& alpha : alphas) {
        long long a = alpha.block_count();
        a_sum += a;
        value *= bigrat(factorial(static_cast<unsigned>(a - 1)), alpha.count_factorial_product());
    }
    value *= bigrat(binomial(static_cast<long long>(m - s + 1) * k,
                             static_cast<long long>(m) * k - a_sum + 1));
    if (s >= 1)
        for (int i = 1; i < s; ++i) value *= k;
    else
        value /= k;
    return value;
}

// Closed route: entry k is the sum over s-tuples of type vectors of
// C_m(alpha_1,...,alpha_s) prod_i Omega^{(i)} monomials. Valid for s <= m.
inline moment_sequence chain_moments_closed(const chain_spec& chain, int k_max) {
    int s = chain.s();
    if (s > chain.m)
        throw std::invalid_argument("chain_moments_closed: closed form requires s <= m");
    if (s == 0) return zm_moments(chain.m, k_max);

    moment_sequence result;
    result.label = "chain_closed(zm:" + std::to_string(chain.m);
    for (const auto& t : chain.tails) result.label += "," + t.label;
    result.label += ")";
    result.even.reserve(k_max);

    for (int k = 1; k <= k_max; ++k) {
        auto types = all_type_vectors(k);
        // per-tail monomials, computed once
        std::vector<std::vector<bigrat>> monos(s);
        for (int i = 0; i < s; ++i) {
            monos[i].reserve(types.size());
            for (const auto& alpha : types) monos[i].push_back(monomial(chain.tails[i], alpha));
        }
        bigrat sum = 0;
        std::vector<partition_type> tuple;
        auto rec = [&](auto&& self, int level, bigrat partial) -> void {
            if (partial == 0) return;
            if (level == s) {
                sum += chain_coefficient(tuple, chain.m, k) * partial;
                return;
            }
            for (size_t t = 0; t < types.size(); ++t) {
                tuple.push_back(types[t]);
                self(self, level + 1, partial * monos[level][t]);
                tuple.pop_back();
            }
        };
        rec(rec, 0, bigrat(1));
        result.even.push_back(sum);
    }
    return result;
}

// Splitting identity for the chain moments: the sum over compositions
// k_1+...+k_c = k of prod_j B(k_j) equals the c-anchored closed form
// c * sum binom((m-s+1)k, mk - sum a_i + c) k^{s-1} prod (a_i-1)!/prod alpha! Omega-monomials.
// Returns (lhs, rhs) for exact comparison.
inline std::pair<bigrat, bigrat> chain_split_identity(const chain_spec& chain, int c, int k) {
    int s = chain.s();
    if (s > chain.m) throw std::invalid_argument("chain_split_identity: requires s <= m");
    if (c < 1 || c > k) throw std::invalid_argument("chain_split_identity: requires 1 <= c <= k");

    moment_sequence b = chain_moments_closed(chain, k);

    bigrat lhs = 0;
    std::vector<int> parts;
    auto compositions = [&](auto&& self, int remaining, int slots, bigrat partial) -> void {
        if (slots == 0) {
            if (remaining == 0) lhs += partial;
            return;
        }
        for (int v = 1; v + (slots - 1) <= remaining; ++v)
            self(self, remaining - v, slots - 1, partial * b.entry(v));
    };
    compositions(compositions, k, c, bigrat(1));

    bigrat rhs = 0;
    auto types = all_type_vectors(k);
    std::vector<std::vector<bigrat>> monos(std::max(s, 1));
    for (int i = 0; i < s; ++i) {
        monos[i].reserve(types.size());
        for (const auto& alpha : types) monos[i].push_back(monomial(chain.tails[i], alpha));
    }
    auto rec = [&](auto&& self, int level, bigrat partial, long long a_sum) -> void {
        if (partial == 0) return;
        if (level == s) {
            bigrat term = partial * bigrat(binomial(static_cast<long long>(chain.m - s + 1) * k,
                                                    static_cast<long long>(chain.m) * k - a_sum + c));
            if (s >= 1)
                for (int i = 1; i < s; ++i) term *= k;
            else
                term /= k;
            rhs += term;
            return;
        }
        for (size_t t = 0; t < types.size(); ++t) {
            const auto& alpha = types[t];
            long long a = alpha.block_count();
            bigrat factor = bigrat(factorial(static_cast<unsigned>(a - 1)),
                                   alpha.count_factorial_product()) *
                            monos[level][t];
            self(self, level + 1, partial * factor, a_sum + a);
        }
    };
    rec(rec, 0, bigrat(1), 0);
    rhs *= c;

    return {lhs, rhs};
}

}  // namespace freemix
