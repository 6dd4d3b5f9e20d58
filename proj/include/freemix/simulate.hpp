#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <variant>

#include "distribution.hpp"

namespace freemix {

// Stream seed for one trial: a splitmix64 mix of (seed, trial). Trials get
// the same stream no matter which thread runs them.
inline std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(trial_stream_seed(seed, trial));
}

// Haar-distributed orthogonal matrix: QR of an i.i.d. Gaussian matrix with
// the Q columns sign-fixed by the diagonal of R.
inline Eigen::MatrixXd sample_haar_orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        bool degenerate = false;
        for (int j = 0; j < n; ++j) {
            if (r(j, j) == 0.0) {
                degenerate = true;
                break;
            }
            if (r(j, j) < 0.0) q.col(j) = -q.col(j);
        }
        if (!degenerate) return q;
    }
}

// (1/n^{m/2}) G_1 ... G_m with i.i.d. Rademacher factors; the squared
// singular value moments converge to the Fuss-Catalan sequence C(k,m).
inline Eigen::MatrixXd sample_matrix_product(int m, int n, std::mt19937_64& rng) {
    if (m < 1) throw std::invalid_argument("sample_matrix_product: m must be positive");
    auto rademacher_matrix = [&]() {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = (rng() & 1) ? 1.0 : -1.0;
        return g;
    };
    Eigen::MatrixXd product = rademacher_matrix();
    for (int i = 1; i < m; ++i) product = product * rademacher_matrix();
    return product / std::pow(static_cast<double>(n), m / 2.0);
}

inline constexpr int kGraphMatrixSizeCap = 32;

// Z-shaped graph matrix on ordered pairs of distinct vertices: the entry at
// ((i1,i2),(j1,j2)) is x(i1,j1) x(i2,j1) x(i2,j2) over one +-1 array x,
// normalized by n.
inline Eigen::MatrixXd build_graph_matrix_z2(int n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("build_graph_matrix_z2: n must be at least 2");
    if (n > kGraphMatrixSizeCap)
        throw std::invalid_argument("build_graph_matrix_z2: n exceeds size guard");
    Eigen::MatrixXd x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = (rng() & 1) ? 1.0 : -1.0;

    int rows = n * (n - 1);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(rows);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);

    Eigen::MatrixXd mat(rows, rows);
    for (int r = 0; r < rows; ++r) {
        auto [i1, i2] = pairs[r];
        for (int c = 0; c < rows; ++c) {
            auto [j1, j2] = pairs[c];
            mat(r, c) = x(i1, j1) * x(i2, j1) * x(i2, j2);
        }
    }
    return mat / static_cast<double>(n);
}

// Normalized trace powers (1/r) tr((M M^T)^k) for k = 1..k_max.
inline std::vector<double> trace_power_moments(const Eigen::MatrixXd& m, int k_max,
                                               double normalizer) {
    Eigen::MatrixXd gram = m * m.transpose();
    std::vector<double> out;
    out.reserve(k_max);
    Eigen::MatrixXd power = gram;
    out.push_back(power.trace() / normalizer);
    for (int k = 2; k <= k_max; ++k) {
        power = power * gram;
        out.push_back(power.trace() / normalizer);
    }
    return out;
}

enum class scenario_kind { drd_chain, matrix_product, graph_z2 };

inline std::string to_string(scenario_kind s) {
    switch (s) {
        case scenario_kind::drd_chain: return "drd-chain";
        case scenario_kind::matrix_product: return "matrix-product";
        case scenario_kind::graph_z2: return "graph-z2";
    }
    return "?";
}

// Head of a mixing chain: either a diagonal law or the matrix-product proxy
// for the Z(m) singular value distribution.
using chain_head = std::variant<distribution_spec, int>;

struct sim_config {
    scenario_kind scenario = scenario_kind::drd_chain;
    int n = 100;
    int trials = 32;
    int k_max = 2;
    std::uint64_t seed = 1;
    double rel_tol = 0.05;
    int threads = 1;
    int zm_m = 1;  // matrix-product scenario
    chain_head head = distribution_spec::rademacher();
    std::vector<distribution_spec> tails;
};

struct sim_row {
    int k = 0;
    double estimate = 0.0;
    double se = 0.0;
    double exact = 0.0;
    double rel_err = 0.0;
    double z = 0.0;
    bool pass = false;
};

struct sim_report {
    sim_config config;
    std::vector<sim_row> rows;
    std::vector<std::vector<double>> per_trial;  // [trial][k-1]
    std::vector<bigrat> exact;                   // exact formula values
    double wall_seconds = 0.0;

    bool all_pass() const {
        for (const auto& row : rows)
            if (!row.pass) return false;
        return true;
    }
};

// pass iff |estimate - exact| <= max(3 SE, rel_tol |exact|)
inline bool compare_verdict(double estimate, double se, double exact, double rel_tol) {
    return std::abs(estimate - exact) <= std::max(3.0 * se, rel_tol * std::abs(exact));
}

// Fills estimates, standard errors and verdicts from per-trial traces.
inline void finalize_report(sim_report& report) {
    const auto& config = report.config;
    report.rows.assign(config.k_max, sim_row{});
    for (int k = 1; k <= config.k_max; ++k) {
        double mean = 0.0;
        for (const auto& trial : report.per_trial) mean += trial[k - 1];
        mean /= config.trials;
        double var = 0.0;
        for (const auto& trial : report.per_trial) {
            double d = trial[k - 1] - mean;
            var += d * d;
        }
        var = config.trials > 1 ? var / (config.trials - 1) : 0.0;
        double se = std::sqrt(var / config.trials);
        double exact = to_double(report.exact[k - 1]);

        sim_row& row = report.rows[k - 1];
        row.k = k;
        row.estimate = mean;
        row.se = se;
        row.exact = exact;
        row.rel_err = exact != 0.0 ? std::abs(mean - exact) / std::abs(exact)
                                   : std::abs(mean - exact);
        row.z = se > 0.0 ? (mean - exact) / se : 0.0;
        row.pass = compare_verdict(mean, se, exact, config.rel_tol);
    }
}

// Re-evaluates verdicts of an existing report against a replacement exact
// sequence.
inline std::vector<bool> compare(const sim_report& report, const moment_sequence& exact) {
    std::vector<bool> verdicts;
    verdicts.reserve(report.rows.size());
    for (const auto& row : report.rows)
        verdicts.push_back(
            compare_verdict(row.estimate, row.se, to_double(exact.entry(row.k)), report.config.rel_tol));
    return verdicts;
}

namespace detail {

template <typename TrialFn>
inline sim_report run_trials(const sim_config& config, std::vector<bigrat> exact, TrialFn&& trial_fn) {
    auto start = std::chrono::steady_clock::now();
    sim_report report;
    report.config = config;
    report.exact = std::move(exact);
    report.per_trial.assign(config.trials, {});

    int workers = std::max(1, config.threads);
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int trial = next.fetch_add(1);
            if (trial >= config.trials) break;
            std::mt19937_64 rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
            report.per_trial[trial] = trial_fn(rng);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    finalize_report(report);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace detail

// Exact reference moments for the whole chain, head mixed with each tail.
inline moment_sequence chain_exact_moments(const chain_head& head,
                                           const std::vector<distribution_spec>& tails, int k_max) {
    if (std::holds_alternative<int>(head)) {
        chain_spec chain;
        chain.m = std::get<int>(head);
        for (const auto& tail : tails) chain.tails.push_back(tail.even_moments(k_max));
        if (chain.s() <= chain.m) return chain_moments_closed(chain, k_max);
        return chain_moments_inductive(chain, k_max);
    }
    moment_sequence acc = std::get<distribution_spec>(head).even_moments(k_max);
    for (const auto& tail : tails) acc = op_r(acc, tail.even_moments(k_max), k_max);
    return acc;
}

// drd-chain: M starts as the head realization and picks up one D^{(i)} R_i
// factor per tail; reports (1/n) tr((M M^T)^k) per trial.
inline sim_report estimate_drd_chain(const sim_config& config) {
    for (const auto& tail : config.tails)
        if (!tail.symmetric())
            throw std::invalid_argument("estimate_drd_chain: tail distributions must be symmetric");
    if (std::holds_alternative<distribution_spec>(config.head) &&
        !std::get<distribution_spec>(config.head).symmetric())
        throw std::invalid_argument("estimate_drd_chain: head distribution must be symmetric");

    moment_sequence exact_seq = chain_exact_moments(config.head, config.tails, config.k_max);
    std::vector<bigrat> exact(exact_seq.even.begin(), exact_seq.even.begin() + config.k_max);

    int n = config.n;
    auto trial = [&, n](std::mt19937_64& rng) {
        Eigen::MatrixXd m;
        if (std::holds_alternative<int>(config.head)) {
            m = sample_matrix_product(std::get<int>(config.head), n, rng);
        } else {
            const auto& spec = std::get<distribution_spec>(config.head);
            Eigen::VectorXd d(n);
            for (int i = 0; i < n; ++i) d(i) = spec.sample(rng);
            m = d.asDiagonal();
        }
        for (const auto& tail : config.tails) {
            Eigen::MatrixXd r = sample_haar_orthogonal(n, rng);
            Eigen::VectorXd d(n);
            for (int i = 0; i < n; ++i) d(i) = tail.sample(rng);
            m = d.asDiagonal() * (r * m);
        }
        return trace_power_moments(m, config.k_max, static_cast<double>(n));
    };
    return detail::run_trials(config, std::move(exact), trial);
}

// matrix-product: the Z(m) proxy alone, against Fuss-Catalan moments.
inline sim_report estimate_matrix_product(const sim_config& config) {
    std::vector<bigrat> exact;
    exact.reserve(config.k_max);
    for (int k = 1; k <= config.k_max; ++k) exact.emplace_back(fuss_catalan(k, config.zm_m));

    int n = config.n;
    int m = config.zm_m;
    auto trial = [&, n, m](std::mt19937_64& rng) {
        Eigen::MatrixXd mat = sample_matrix_product(m, n, rng);
        return trace_power_moments(mat, config.k_max, static_cast<double>(n));
    };
    return detail::run_trials(config, std::move(exact), trial);
}

// graph-z2: the Z(2) graph matrix on n(n-1) pair indices, against C(k,2);
// the trace normalizer is r(n,2) = n(n-1).
inline sim_report estimate_graph_z2(const sim_config& config) {
    std::vector<bigrat> exact;
    exact.reserve(config.k_max);
    for (int k = 1; k <= config.k_max; ++k) exact.emplace_back(fuss_catalan(k, 2));

    int n = config.n;
    auto trial = [&, n](std::mt19937_64& rng) {
        Eigen::MatrixXd mat = build_graph_matrix_z2(n, rng);
        return trace_power_moments(mat, config.k_max, static_cast<double>(n) * (n - 1));
    };
    return detail::run_trials(config, std::move(exact), trial);
}

inline sim_report run_scenario(const sim_config& config) {
    if (config.n < 2) throw std::invalid_argument("run_scenario: n must be at least 2");
    if (config.trials < 1) throw std::invalid_argument("run_scenario: trials must be positive");
    if (config.k_max < 1) throw std::invalid_argument("run_scenario: k must be positive");
    switch (config.scenario) {
        case scenario_kind::drd_chain: return estimate_drd_chain(config);
        case scenario_kind::matrix_product: return estimate_matrix_product(config);
        case scenario_kind::graph_z2: return estimate_graph_z2(config);
    }
    throw std::logic_error("run_scenario: unknown scenario");
}

}  // namespace freemix
