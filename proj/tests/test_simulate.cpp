#include <catch2/catch_amalgamated.hpp>

#include "freemix/simulate.hpp"

using namespace freemix;

TEST_CASE("trial streams are deterministic and distinct") {
    CHECK(trial_stream_seed(42, 0) == trial_stream_seed(42, 0));
    CHECK(trial_stream_seed(42, 0) != trial_stream_seed(42, 1));
    CHECK(trial_stream_seed(42, 0) != trial_stream_seed(43, 0));
    std::mt19937_64 a = trial_rng(9, 4);
    std::mt19937_64 b = trial_rng(9, 4);
    CHECK(a() == b());
}

TEST_CASE("haar orthogonal sampling") {
    std::mt19937_64 rng = trial_rng(1, 0);
    for (int n : {1, 5, 40}) {
        Eigen::MatrixXd q = sample_haar_orthogonal(n, rng);
        double err =
            (q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
        CHECK(err <= 1e-10);
    }
    // n = 1: +-1 uniformly
    bool saw_plus = false, saw_minus = false;
    for (int i = 0; i < 64; ++i) {
        double v = sample_haar_orthogonal(1, rng)(0, 0);
        CHECK(std::abs(std::abs(v) - 1.0) <= 1e-12);
        (v > 0 ? saw_plus : saw_minus) = true;
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("haar entry statistics") {
    // E[Q_00] = 0 with Var(Q_00) = 1/n; check the sample mean within 4 sigma
    std::mt19937_64 rng = trial_rng(2, 0);
    const int n = 3, samples = 10000;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) sum += sample_haar_orthogonal(n, rng)(0, 0);
    double mean = sum / samples;
    double sigma = std::sqrt(1.0 / n / samples);
    CHECK(std::abs(mean) <= 4.0 * sigma);
}

TEST_CASE("haar invariance under fixed permutation") {
    // (1/n) tr((DRD')(DRD')^T) has the same law with R replaced by PR
    const int n = 80, trials = 32;
    distribution_spec gauss = distribution_spec::gaussian(1);
    auto stat = [&](std::uint64_t seed, bool permute) {
        std::vector<double> values;
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng = trial_rng(seed, t);
            Eigen::VectorXd d1(n), d2(n);
            for (int i = 0; i < n; ++i) d1(i) = gauss.sample(rng);
            Eigen::MatrixXd r = sample_haar_orthogonal(n, rng);
            for (int i = 0; i < n; ++i) d2(i) = gauss.sample(rng);
            if (permute) r = r.colwise().reverse().eval();  // fixed permutation P
            Eigen::MatrixXd m = d1.asDiagonal() * r * d2.asDiagonal();
            values.push_back((m * m.transpose()).trace() / n);
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= trials;
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= (trials - 1);
        return std::pair<double, double>(mean, std::sqrt(var / trials));
    };
    auto [mean_a, se_a] = stat(100, false);
    auto [mean_b, se_b] = stat(200, true);
    CHECK(std::abs(mean_a - mean_b) <= 3.0 * std::sqrt(se_a * se_a + se_b * se_b));
}

TEST_CASE("distribution specs") {
    distribution_spec rad = distribution_spec::rademacher();
    moment_sequence rm = rad.even_moments(4);
    for (int k = 1; k <= 4; ++k) CHECK(rm.entry(k) == 1);
    CHECK(rad.symmetric());

    distribution_spec g2 = distribution_spec::gaussian(bigrat(1, 2));
    moment_sequence gm = g2.even_moments(3);
    CHECK(gm.entry(1) == bigrat(1, 4));          // sigma^2
    CHECK(gm.entry(2) == bigrat(3, 16));         // 3 sigma^4
    CHECK(gm.entry(3) == bigrat(15, 64));        // 15 sigma^6

    distribution_spec atoms = distribution_spec::finite_atoms(
        {{bigrat(2), bigrat(1, 4)}, {bigrat(-2), bigrat(1, 4)}, {bigrat(0), bigrat(1, 2)}});
    CHECK(atoms.symmetric());
    CHECK(atoms.even_moments(2).entry(1) == 2);   // 4 * 1/2
    CHECK(atoms.even_moments(2).entry(2) == 8);   // 16 * 1/2

    distribution_spec lopsided = distribution_spec::finite_atoms(
        {{bigrat(2), bigrat(1, 2)}, {bigrat(-1), bigrat(1, 2)}});
    CHECK_FALSE(lopsided.symmetric());

    CHECK_THROWS_AS(distribution_spec::finite_atoms({{bigrat(1), bigrat(1, 3)}}),
                    std::invalid_argument);
}

TEST_CASE("verdict logic") {
    CHECK(compare_verdict(1.02, 0.1, 1.0, 0.05));        // inside 3 SE
    CHECK(compare_verdict(1.04, 0.0, 1.0, 0.05));        // inside rel tol
    CHECK_FALSE(compare_verdict(1.2, 0.01, 1.0, 0.05));  // outside both

    // zero-variance trials: SE = 0, only the relative band remains
    sim_report report;
    report.config.trials = 4;
    report.config.k_max = 1;
    report.config.rel_tol = 0.01;
    report.per_trial.assign(4, {2.0});
    report.exact = {bigrat(2)};
    finalize_report(report);
    CHECK(report.rows[0].se == 0.0);
    CHECK(report.rows[0].pass);

    report.exact = {bigrat(3)};  // deliberately wrong target
    finalize_report(report);
    CHECK_FALSE(report.rows[0].pass);

    // negative control through the comparison helper
    report.exact = {bigrat(2)};
    finalize_report(report);
    moment_sequence wrong{"wrong", {bigrat(5)}};
    CHECK_FALSE(compare(report, wrong)[0]);
}

TEST_CASE("graph matrix structure") {
    std::mt19937_64 rng = trial_rng(3, 0);
    const int n = 5;
    Eigen::MatrixXd m = build_graph_matrix_z2(n, rng);
    REQUIRE(m.rows() == n * (n - 1));
    REQUIRE(m.cols() == n * (n - 1));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            CHECK(std::abs(std::abs(m(r, c)) - 1.0 / n) <= 1e-12);
    CHECK_THROWS_AS(build_graph_matrix_z2(40, rng), std::invalid_argument);
}

TEST_CASE("scenario determinism across thread counts") {
    sim_config config;
    config.scenario = scenario_kind::drd_chain;
    config.n = 60;
    config.trials = 8;
    config.k_max = 2;
    config.seed = 12345;
    config.head = distribution_spec::rademacher();
    config.tails = {distribution_spec::gaussian(1)};

    config.threads = 1;
    sim_report serial = run_scenario(config);
    config.threads = 4;
    sim_report parallel = run_scenario(config);
    CHECK(serial.per_trial == parallel.per_trial);

    sim_report again = run_scenario(config);
    CHECK(again.per_trial == parallel.per_trial);
}

TEST_CASE("drd chain rejects asymmetric tails") {
    sim_config config;
    config.scenario = scenario_kind::drd_chain;
    config.n = 20;
    config.trials = 2;
    config.k_max = 1;
    config.head = distribution_spec::rademacher();
    config.tails = {distribution_spec::finite_atoms(
        {{bigrat(2), bigrat(1, 2)}, {bigrat(-1), bigrat(1, 2)}})};
    CHECK_THROWS_AS(estimate_drd_chain(config), std::invalid_argument);
}

TEST_CASE("unit variance scenarios hit 1 at k=1") {
    sim_config config;
    config.scenario = scenario_kind::drd_chain;
    config.n = 120;
    config.trials = 16;
    config.k_max = 1;
    config.seed = 77;
    config.head = distribution_spec::rademacher();
    config.tails = {distribution_spec::gaussian(1)};
    sim_report report = run_scenario(config);
    CHECK(std::abs(report.rows[0].estimate - 1.0) <= 3.0 * report.rows[0].se + 1e-9);

    sim_config mp;
    mp.scenario = scenario_kind::matrix_product;
    mp.zm_m = 1;
    mp.n = 100;
    mp.trials = 8;
    mp.k_max = 1;
    mp.seed = 78;
    sim_report mp_report = run_scenario(mp);
    // Rademacher factors make (1/n) tr(M M^T) equal 1 at m = 1 up to roundoff
    CHECK(std::abs(mp_report.rows[0].estimate - 1.0) <= 1e-12);
}
