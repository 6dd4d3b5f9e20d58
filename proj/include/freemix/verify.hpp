#pragma once

#include <random>
#include <sstream>

#include "moments.hpp"

namespace freemix {

struct check_result {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string counterexample;  // first failing case, fully printed
};

namespace detail {

class check_recorder {
public:
    explicit check_recorder(std::string name) { result_.name = std::move(name); }

    template <typename Describe>
    void record(bool ok, Describe&& describe) {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.counterexample = describe();
        }
    }

    check_result take() { return std::move(result_); }

private:
    check_result result_;
};

inline std::string type_to_string(const partition_type& alpha) {
    std::string s = "(";
    for (size_t i = 0; i < alpha.counts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha.counts()[i]);
    }
    return s + ")";
}

inline std::string multiset_to_string(const std::vector<int>& sizes) {
    std::string s = "{";
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes[i]);
    }
    return s + "}";
}

inline bigrat random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den_dist(1, 8);
    int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(-3 * den, 3 * den);
    return bigrat(num_dist(rng), den);
}

inline moment_sequence random_even_sequence(std::mt19937_64& rng, int k_max, std::string label) {
    moment_sequence seq;
    seq.label = std::move(label);
    seq.even.reserve(k_max);
    for (int k = 0; k < k_max; ++k) seq.even.push_back(random_rational(rng));
    return seq;
}

inline general_moment_sequence random_general_sequence(std::mt19937_64& rng, int k_max,
                                                       std::string label) {
    general_moment_sequence seq;
    seq.label = std::move(label);
    seq.moments.reserve(k_max);
    for (int k = 0; k < k_max; ++k) seq.moments.push_back(random_rational(rng));
    return seq;
}

}  // namespace detail

// Closed-form |NP(alpha)| against enumeration for every type over [k], and
// the per-k totals against the Catalan numbers.
inline check_result check_noncrossing_counts(int k_cap = 9) {
    detail::check_recorder rec("noncrossing counts by type");
    for (int k = 1; k <= k_cap; ++k) {
        std::map<std::vector<long long>, bigint> observed;
        bigint total = 0;
        for_each_noncrossing(k, [&](const set_partition& p) {
            ++observed[type_of(p).counts()];
            ++total;
        });
        rec.record(total == catalan(k), [&] {
            std::ostringstream os;
            os << "k=" << k << ": enumerated " << total << " partitions, expected catalan(k)="
               << catalan(k);
            return os.str();
        });
        for (const auto& alpha : all_type_vectors(k)) {
            bigint enumerated = observed.count(alpha.counts()) ? observed[alpha.counts()] : 0;
            bigint closed = count_nc_by_type(alpha);
            rec.record(enumerated == closed, [&] {
                std::ostringstream os;
                os << "k=" << k << " alpha=" << detail::type_to_string(alpha) << ": enumerated "
                   << enumerated << ", closed form " << closed;
                return os.str();
            });
        }
    }
    return rec.take();
}

// Quotient cycle sizes agree with the Kreweras block sizes, have k-a+1 parts
// and sum to k; block counts of a partition and its complement sum to k+1.
inline check_result check_quotient_kreweras_duality(int k_cap = 9) {
    detail::check_recorder rec("quotient vs Kreweras duality");
    for (int k = 1; k <= k_cap; ++k) {
        for_each_noncrossing(k, [&](const set_partition& p) {
            cycle_multiset quotient = quotient_cycle_sizes(p);
            set_partition complement = kreweras_complement(p);
            std::vector<int> complement_sizes = complement.block_sizes();
            long long a = p.block_count();
            bool ok = quotient.sizes == complement_sizes &&
                      static_cast<long long>(quotient.sizes.size()) == k - a + 1 &&
                      quotient.total == k &&
                      p.block_count() + complement.block_count() == k + 1;
            rec.record(ok, [&] {
                std::ostringstream os;
                os << "k=" << k << " partition with " << a << " blocks: quotient "
                   << detail::multiset_to_string(quotient.sizes) << ", complement sizes "
                   << detail::multiset_to_string(complement_sizes);
                return os.str();
            });
        });
    }
    return rec.take();
}

// Catalan-product sum over NP(alpha) against its closed form.
inline check_result check_single_catalan_sums(int k_cap = 9) {
    detail::check_recorder rec("single-partition Catalan sums");
    for (int k = 1; k <= k_cap; ++k) {
        std::map<std::vector<long long>, bigrat> observed;
        for_each_noncrossing(k, [&](const set_partition& p) {
            bigint term = 1;
            for (int x : quotient_cycle_sizes(p).sizes) term *= catalan(x - 1);
            observed[type_of(p).counts()] += bigrat(term);
        });
        for (const auto& alpha : all_type_vectors(k)) {
            bigrat brute = observed.count(alpha.counts()) ? observed[alpha.counts()] : bigrat(0);
            bigrat closed = single_catalan_sum(alpha);
            rec.record(brute == closed, [&] {
                std::ostringstream os;
                os << "k=" << k << " alpha=" << detail::type_to_string(alpha) << ": brute "
                   << to_string(brute) << ", closed " << to_string(closed);
                return os.str();
            });
        }
    }
    return rec.take();
}

// Catalan-product sum over admissible pairs against its closed form, for
// every ordered pair of types.
inline check_result check_pair_catalan_sums(int k_cap = 7) {
    detail::check_recorder rec("pair Catalan sums");
    for (int k = 1; k <= k_cap; ++k) {
        std::vector<set_partition> all = enumerate_noncrossing(k);
        std::vector<std::vector<long long>> keys;
        keys.reserve(all.size());
        for (const auto& p : all) keys.push_back(type_of(p).counts());

        std::map<std::pair<std::vector<long long>, std::vector<long long>>, bigrat> observed;
        for (size_t i = 0; i < all.size(); ++i) {
            for (size_t j = 0; j < all.size(); ++j) {
                if (!is_noncrossing(interleave_pair(all[i], all[j]))) continue;
                bigint term = 1;
                for (int x : pair_region_sizes(all[i], all[j]).sizes) term *= catalan(x - 1);
                observed[{keys[i], keys[j]}] += bigrat(term);
            }
        }
        auto types = all_type_vectors(k);
        for (const auto& alpha : types) {
            for (const auto& beta : types) {
                auto it = observed.find({alpha.counts(), beta.counts()});
                bigrat brute = it == observed.end() ? bigrat(0) : it->second;
                bigrat closed = pair_catalan_sum(alpha, beta);
                rec.record(brute == closed, [&] {
                    std::ostringstream os;
                    os << "k=" << k << " alpha=" << detail::type_to_string(alpha)
                       << " beta=" << detail::type_to_string(beta) << ": brute " << to_string(brute)
                       << ", closed " << to_string(closed);
                    return os.str();
                });
            }
        }
    }
    return rec.take();
}

// Generalized family counts against enumeration, plus the anchored c-gon
// variant. Enumeration grounds are capped at `ground_cap`.
inline check_result check_general_counts(int ground_cap = 12) {
    detail::check_recorder rec("generalized family counts");
    for (int m = 1; m <= ground_cap; ++m) {
        for (int k = 1; m * k <= ground_cap; ++k) {
            auto types = all_type_vectors(k);
            for (int s = 1; s <= std::min(m, 3); ++s) {
                auto group = detail::np_general_residue_groups(m, s, k);
                std::map<std::vector<long long>, bigint> observed;
                for_each_noncrossing(m * k, [&](const set_partition& p) {
                    auto classified = detail::classify_np_general(p, group, m, s, k);
                    if (!classified) return;
                    std::vector<long long> key;
                    for (const auto& t : *classified) {
                        key.insert(key.end(), t.counts().begin(), t.counts().end());
                        key.push_back(-1);
                    }
                    ++observed[key];
                });
                std::vector<partition_type> tuple;
                auto walk = [&](auto&& self, int level) -> void {
                    if (level == s) {
                        std::vector<long long> key;
                        for (const auto& t : tuple) {
                            key.insert(key.end(), t.counts().begin(), t.counts().end());
                            key.push_back(-1);
                        }
                        bigint enumerated = observed.count(key) ? observed[key] : 0;
                        bigint closed = count_np_general(tuple, m);
                        rec.record(enumerated == closed, [&] {
                            std::ostringstream os;
                            os << "m=" << m << " s=" << s << " k=" << k << " types";
                            for (const auto& t : tuple) os << " " << detail::type_to_string(t);
                            os << ": enumerated " << enumerated << ", closed " << closed;
                            return os.str();
                        });
                        return;
                    }
                    for (const auto& t : types) {
                        tuple.push_back(t);
                        self(self, level + 1);
                        tuple.pop_back();
                    }
                };
                walk(walk, 0);
            }
        }
    }

    // c-gon variant: one classification pass per (m, s, k) over [(m+1)k],
    // keyed by the type tuple plus the size of the block at the anchor.
    for (int m = 1; m <= ground_cap; ++m) {
        for (int k = 1; (m + 1) * k <= ground_cap; ++k) {
            auto types = all_type_vectors(k);
            for (int s = 1; s <= std::min(m, 3); ++s) {
                int mm = m + 1;
                int ss = s + 1;
                auto group = detail::np_general_residue_groups(mm, ss, k);
                int anchor = mm * k;
                std::map<std::vector<long long>, bigint> observed;
                for_each_noncrossing(mm * k, [&](const set_partition& p) {
                    auto classified = detail::classify_np_general(p, group, mm, ss, k);
                    if (!classified) return;
                    std::vector<long long> key;
                    for (const auto& t : *classified) {
                        key.insert(key.end(), t.counts().begin(), t.counts().end());
                        key.push_back(-1);
                    }
                    key.push_back(static_cast<long long>(p.block(p.block_index_of(anchor)).size()));
                    ++observed[key];
                });
                for (int c = 1; c <= k; ++c) {
                    std::vector<long long> extra_counts(k, 0);
                    extra_counts[0] = k - c;
                    extra_counts[c - 1] += 1;
                    partition_type extra(std::move(extra_counts));
                    std::vector<partition_type> tuple;
                    auto walk = [&](auto&& self, int level) -> void {
                        if (level == s) {
                            std::vector<long long> key;
                            for (const auto& t : tuple) {
                                key.insert(key.end(), t.counts().begin(), t.counts().end());
                                key.push_back(-1);
                            }
                            key.insert(key.end(), extra.counts().begin(), extra.counts().end());
                            key.push_back(-1);
                            key.push_back(c);
                            bigint enumerated = observed.count(key) ? observed[key] : 0;
                            bigint closed = count_np_general_cgon(tuple, m, c);
                            rec.record(enumerated == closed, [&] {
                                std::ostringstream os;
                                os << "c-gon m=" << m << " s=" << s << " k=" << k << " c=" << c
                                   << " types";
                                for (const auto& t : tuple) os << " " << detail::type_to_string(t);
                                os << ": enumerated " << enumerated << ", closed " << closed;
                                return os.str();
                            });
                            return;
                        }
                        for (const auto& t : types) {
                            tuple.push_back(t);
                            self(self, level + 1);
                            tuple.pop_back();
                        }
                    };
                    walk(walk, 0);
                }
            }
        }
    }
    return rec.take();
}

// |NP(alpha, X)| reconstructed from the labeled closed form against direct
// enumeration, for every alpha over [k] and every admissible size multiset.
inline check_result check_labeled_counts(int k_cap = 7) {
    detail::check_recorder rec("labeled count consistency");
    for (int k = 1; k <= k_cap; ++k) {
        std::map<std::pair<std::vector<long long>, std::vector<int>>, bigint> observed;
        for_each_noncrossing(k, [&](const set_partition& p) {
            ++observed[{type_of(p).counts(), quotient_cycle_sizes(p).sizes}];
        });
        for (const auto& alpha : all_type_vectors(k)) {
            int p = k - static_cast<int>(alpha.block_count()) + 1;
            for (const auto& sizes : part_size_multisets(k, p)) {
                cycle_multiset x = make_cycle_multiset(sizes, k);
                auto it = observed.find({alpha.counts(), x.sizes});
                bigint enumerated = it == observed.end() ? 0 : it->second;
                bigint reconstructed = count_nc_with_region_sizes(alpha, x);
                rec.record(enumerated == reconstructed, [&] {
                    std::ostringstream os;
                    os << "k=" << k << " alpha=" << detail::type_to_string(alpha) << " X="
                       << detail::multiset_to_string(x.sizes) << ": enumerated " << enumerated
                       << ", reconstructed " << reconstructed;
                    return os.str();
                });
            }
        }
    }
    return rec.take();
}

// The standalone binomial/Catalan identities over their full ranges.
inline check_result check_alternating_binomial_1(int n_cap = 12) {
    detail::check_recorder rec("alternating binomial identity I");
    for (long long n = 1; n <= n_cap; ++n)
        for (long long m = 0; m < n; ++m)
            for (long long k = 0; k <= m; ++k) {
                identity_sides sides = verify_alt_binomial_1(n, m, k);
                rec.record(sides.equal(), [&] {
                    std::ostringstream os;
                    os << "n=" << n << " m=" << m << " k=" << k << ": lhs " << sides.lhs << ", rhs "
                       << sides.rhs;
                    return os.str();
                });
            }
    return rec.take();
}

inline check_result check_alternating_binomial_2(int cap = 10) {
    detail::check_recorder rec("alternating binomial identity II");
    for (long long n = 0; n <= cap; ++n)
        for (long long m = 0; m <= cap; ++m)
            for (long long k = 0; k <= cap; ++k) {
                identity_sides sides = verify_alt_binomial_2(n, m, k);
                rec.record(sides.equal(), [&] {
                    std::ostringstream os;
                    os << "n=" << n << " m=" << m << " k=" << k << ": lhs " << sides.lhs << ", rhs "
                       << sides.rhs;
                    return os.str();
                });
            }
    return rec.take();
}

inline check_result check_catalan_composition_sums(int n_cap = 8, int k_cap = 6) {
    detail::check_recorder rec("Catalan composition sums");
    for (unsigned n = 0; n <= static_cast<unsigned>(n_cap); ++n)
        for (unsigned k = 1; k <= static_cast<unsigned>(k_cap); ++k) {
            bigint closed = catalan_composition_sum(n, k);
            bigint brute = catalan_composition_sum_direct(n, k);
            rec.record(closed == brute, [&] {
                std::ostringstream os;
                os << "n=" << n << " k=" << k << ": closed " << closed << ", brute " << brute;
                return os.str();
            });
        }
    return rec.take();
}

inline check_result check_fuss_catalan_composition_sums(int k_cap = 6, int m_cap = 3) {
    detail::check_recorder rec("Fuss-Catalan composition sums");
    for (unsigned k = 1; k <= static_cast<unsigned>(k_cap); ++k)
        for (unsigned m = 0; m <= static_cast<unsigned>(m_cap); ++m)
            for (unsigned t = 1; t <= k; ++t) {
                bigrat closed = fuss_catalan_composition_sum(k, m, t);
                bigrat brute = fuss_catalan_composition_sum_direct(k, m, t);
                rec.record(closed == brute, [&] {
                    std::ostringstream os;
                    os << "k=" << k << " m=" << m << " t=" << t << ": closed " << to_string(closed)
                       << ", brute " << to_string(brute);
                    return os.str();
                });
            }
    return rec.take();
}

inline check_result check_key_identity(int m_cap = 4, int k_cap = 5) {
    detail::check_recorder rec("chain key identity");
    for (long long m = 1; m <= m_cap; ++m)
        for (long long s = 0; s < m; ++s)
            for (long long k = 1; k <= k_cap; ++k)
                for (long long a_sum = s; a_sum <= s * k; ++a_sum)
                    for (long long b = 1; b <= k; ++b) {
                        identity_sides sides = verify_key_identity(m, s, k, a_sum, b);
                        rec.record(sides.equal(), [&] {
                            std::ostringstream os;
                            os << "m=" << m << " s=" << s << " k=" << k << " a_sum=" << a_sum
                               << " b=" << b << ": lhs " << sides.lhs << ", rhs " << sides.rhs;
                            return os.str();
                        });
                    }
    return rec.take();
}

inline check_result check_product_shift_sums(int k_cap = 7, int s_cap = 3) {
    detail::check_recorder rec("product shift sums");
    for (int k = 1; k <= k_cap; ++k)
        for (int p = 1; p <= k; ++p)
            for (const auto& sizes : part_size_multisets(k, p)) {
                std::vector<long long> x(sizes.begin(), sizes.end());
                for (int s = 0; s <= std::min(s_cap, k - p); ++s) {
                    bigint closed = product_shift_sum(x, s);
                    bigint brute = product_shift_sum_direct(x, s);
                    rec.record(closed == brute, [&] {
                        std::ostringstream os;
                        os << "X=" << detail::multiset_to_string(sizes) << " s=" << s << ": closed "
                           << closed << ", brute " << brute;
                        return os.str();
                    });
                }
            }
    return rec.take();
}

// Direct coefficient formula against the cumulant/Kreweras expansion on
// seeded random rational moment sequences.
inline check_result check_free_product_oracle(int k_cap = 7, int trials = 50,
                                              std::uint64_t seed = 20240817) {
    detail::check_recorder rec("free product vs cumulant oracle");
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        general_moment_sequence a = detail::random_general_sequence(rng, k_cap, "a");
        general_moment_sequence b = detail::random_general_sequence(rng, k_cap, "b");
        std::vector<bigrat> direct = free_product_moments(a, b, k_cap);
        std::vector<bigrat> oracle = cumulant_oracle_product_moments(a, b, k_cap);
        for (int k = 1; k <= k_cap; ++k) {
            rec.record(direct[k - 1] == oracle[k - 1], [&] {
                std::ostringstream os;
                os << "trial " << trial << " k=" << k << ": direct " << to_string(direct[k - 1])
                   << ", oracle " << to_string(oracle[k - 1]) << "; a=[";
                for (const auto& q : a.moments) os << to_string(q) << " ";
                os << "] b=[";
                for (const auto& q : b.moments) os << to_string(q) << " ";
                os << "]";
                return os.str();
            });
        }
    }
    return rec.take();
}

// Commutativity and associativity of the mixing operation at the moment
// level, on seeded random even-moment sequences.
inline check_result check_op_algebra(int commut_k = 6, int assoc_k = 5, int trials = 12,
                                     std::uint64_t seed = 20240818) {
    detail::check_recorder rec("mixing operation algebra");
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        moment_sequence a = detail::random_even_sequence(rng, commut_k, "a");
        moment_sequence b = detail::random_even_sequence(rng, commut_k, "b");
        moment_sequence ab = op_r(a, b, commut_k);
        moment_sequence ba = op_r(b, a, commut_k);
        for (int k = 1; k <= commut_k; ++k)
            rec.record(ab.entry(k) == ba.entry(k), [&] {
                std::ostringstream os;
                os << "commutativity trial " << trial << " k=" << k << ": "
                   << to_string(ab.entry(k)) << " vs " << to_string(ba.entry(k));
                return os.str();
            });

        moment_sequence c = detail::random_even_sequence(rng, assoc_k, "c");
        moment_sequence left = op_r(op_r(a, b, assoc_k), c, assoc_k);
        moment_sequence right = op_r(a, op_r(b, c, assoc_k), assoc_k);
        for (int k = 1; k <= assoc_k; ++k)
            rec.record(left.entry(k) == right.entry(k), [&] {
                std::ostringstream os;
                os << "associativity trial " << trial << " k=" << k << ": "
                   << to_string(left.entry(k)) << " vs " << to_string(right.entry(k));
                return os.str();
            });
    }
    return rec.take();
}

// Single-step closed form, Fuss-Catalan composition, and the two chain
// evaluation routes.
inline check_result check_closed_form_coherence(std::uint64_t seed = 20240819) {
    detail::check_recorder rec("closed-form coherence");
    std::mt19937_64 rng(seed);
    const int k_max = 8;
    moment_sequence rademacher{"rademacher", std::vector<bigrat>(k_max, bigrat(1))};
    for (int m = 0; m <= 4; ++m) {
        std::vector<moment_sequence> omegas;
        omegas.push_back(rademacher);
        omegas.push_back(detail::random_even_sequence(rng, k_max, "random"));
        for (const auto& omega : omegas) {
            moment_sequence via_op = op_r(zm_moments(m, k_max), omega, k_max);
            moment_sequence closed = zm_convolve_closed(m, omega, k_max);
            for (int k = 1; k <= k_max; ++k)
                rec.record(via_op.entry(k) == closed.entry(k), [&] {
                    std::ostringstream os;
                    os << "m=" << m << " omega=" << omega.label << " k=" << k << ": op route "
                       << to_string(via_op.entry(k)) << ", closed " << to_string(closed.entry(k));
                    return os.str();
                });
        }
    }
    for (int m = 0; m <= 6; ++m)
        for (int mp = 0; m + mp <= 6; ++mp) {
            moment_sequence composed = zm_compose(m, mp, k_max);
            moment_sequence expected = zm_moments(m + mp, k_max);
            for (int k = 1; k <= k_max; ++k)
                rec.record(composed.entry(k) == expected.entry(k), [&] {
                    std::ostringstream os;
                    os << "zm_compose(" << m << "," << mp << ") k=" << k << ": "
                       << to_string(composed.entry(k)) << " vs " << to_string(expected.entry(k));
                    return os.str();
                });
        }
    const int chain_k = 6;
    for (int m = 0; m <= 4; ++m)
        for (int s = 0; s <= m; ++s) {
            chain_spec chain;
            chain.m = m;
            for (int i = 0; i < s; ++i)
                chain.tails.push_back(
                    detail::random_even_sequence(rng, chain_k, "t" + std::to_string(i)));
            moment_sequence inductive = chain_moments_inductive(chain, chain_k);
            moment_sequence closed = chain_moments_closed(chain, chain_k);
            for (int k = 1; k <= chain_k; ++k)
                rec.record(inductive.entry(k) == closed.entry(k), [&] {
                    std::ostringstream os;
                    os << "chain m=" << m << " s=" << s << " k=" << k << ": inductive "
                       << to_string(inductive.entry(k)) << ", closed " << to_string(closed.entry(k));
                    return os.str();
                });
        }
    return rec.take();
}

// Composition products of chain moments against the anchored closed form.
inline check_result check_chain_split_identity(std::uint64_t seed = 20240820) {
    detail::check_recorder rec("chain splitting identity");
    std::mt19937_64 rng(seed);
    const int k_cap = 5;
    for (int m = 1; m <= 3; ++m)
        for (int s = 0; s <= std::min(m, 2); ++s) {
            chain_spec chain;
            chain.m = m;
            for (int i = 0; i < s; ++i)
                chain.tails.push_back(
                    detail::random_even_sequence(rng, k_cap, "t" + std::to_string(i)));
            for (int k = 1; k <= k_cap; ++k)
                for (int c = 1; c <= std::min(k, 3); ++c) {
                    auto [lhs, rhs] = chain_split_identity(chain, c, k);
                    rec.record(lhs == rhs, [&] {
                        std::ostringstream os;
                        os << "m=" << m << " s=" << s << " k=" << k << " c=" << c << ": lhs "
                           << to_string(lhs) << ", rhs " << to_string(rhs);
                        return os.str();
                    });
                }
        }
    return rec.take();
}

// Suites exposed by the command-line `verify` subcommand. `k_cap` of 0 keeps
// every check at its default (full) range.
inline std::vector<check_result> run_verification_suite(const std::string& suite, int k_cap = 0) {
    auto capped = [&](int dflt) { return k_cap > 0 ? std::min(k_cap, dflt) : dflt; };
    std::vector<check_result> results;
    bool all = suite == "all";
    if (all || suite == "identities") {
        results.push_back(check_alternating_binomial_1(capped(12)));
        results.push_back(check_alternating_binomial_2(capped(10)));
        results.push_back(check_catalan_composition_sums(capped(8), capped(6)));
        results.push_back(check_fuss_catalan_composition_sums(capped(6), 3));
        results.push_back(check_key_identity(4, capped(5)));
        results.push_back(check_product_shift_sums(capped(7), 3));
    }
    if (all || suite == "partitions") {
        results.push_back(check_noncrossing_counts(capped(9)));
        results.push_back(check_quotient_kreweras_duality(capped(9)));
        results.push_back(check_general_counts(capped(12)));
        results.push_back(check_labeled_counts(capped(7)));
    }
    if (all || suite == "freeprob") {
        results.push_back(check_single_catalan_sums(capped(9)));
        results.push_back(check_pair_catalan_sums(capped(7)));
        results.push_back(check_free_product_oracle(capped(7)));
        results.push_back(check_op_algebra(capped(6), capped(5)));
        results.push_back(check_closed_form_coherence());
        results.push_back(check_chain_split_identity());
    }
    if (results.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
    return results;
}

}  // namespace freemix
