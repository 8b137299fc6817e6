#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "skorokhod/markov_lab.hpp"

using namespace skorokhod;

TEST(Kernels, Catalog) {
    std::vector<std::string> names;
    for (const auto& k : builtin_kernels()) names.push_back(k.name);
    for (const char* want : {"identity", "drift", "srw", "lazy", "fixed-jump", "unit-jump"})
        EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
    EXPECT_THROW(make_kernel("nope", 4), std::invalid_argument);
    EXPECT_THROW(make_kernel("drift(x)", 4), std::invalid_argument);
    EXPECT_THROW(make_kernel("drift(1", 4), std::invalid_argument);
    EXPECT_THROW(make_kernel("lazy(1.5)", 4), std::invalid_argument);
    EXPECT_THROW(make_kernel("srw", 0), std::invalid_argument);
}

TEST(Kernels, DeterministicPaths) {
    const auto id = simulate_chain(make_kernel("identity", 8), {0.3}, 5, 1);
    for (const auto& y : id) EXPECT_EQ(y[0], 0.3);

    const int n = 4;
    const auto drift = simulate_chain(make_kernel("drift(1)", n), {0.0}, 4, 1);
    ASSERT_EQ(drift.size(), 5u);
    for (int k = 0; k <= 4; ++k) EXPECT_DOUBLE_EQ(drift[k][0], static_cast<double>(k) / n);
    EXPECT_THROW(simulate_chain(make_kernel("identity", 8), {0.0}, -1, 1), std::invalid_argument);
}

TEST(Kernels, FixedJumpCrossesZeroOnce) {
    const int n = 64;
    const auto k = make_kernel("fixed-jump", n);
    const auto path = simulate_chain(k, k.start, n, 1);
    int jumps = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const double step = path[i][0] - path[i - 1][0];
        if (step > 0.5) {
            ++jumps;
            EXPECT_NEAR(static_cast<double>(i), n / 2.0, 1.0);
        }
    }
    EXPECT_EQ(jumps, 1);
    EXPECT_GE(path.back()[0], 1.0);
}

TEST(Kernels, SeedsReproduce) {
    const auto k = make_kernel("srw", 64);
    EXPECT_EQ(simulate_chain(k, {0.0}, 200, 9), simulate_chain(k, {0.0}, 200, 9));
    EXPECT_NE(simulate_chain(k, {0.0}, 200, 9), simulate_chain(k, {0.0}, 200, 10));
}

TEST(Kernels, SrwMoments) {
    const int n = 16;
    const auto k = make_kernel("srw", n);
    const int reps = 20000, steps = 8;
    double sum = 0.0, sq = 0.0;
    for (int r = 0; r < reps; ++r) {
        Rng rng(5, static_cast<std::uint64_t>(r));
        const double y = simulate_chain(k, {0.0}, steps, rng).back()[0];
        sum += y;
        sq += y * y;
    }
    const double var = static_cast<double>(steps) / n;
    EXPECT_NEAR(sum / reps, 0.0, 5.0 * std::sqrt(var / reps));
    EXPECT_NEAR(sq / reps, var, 0.03);
}

TEST(Confidence, HalfWidth) {
    EXPECT_NEAR(confidence_half_width(50, 100), kConfidenceZ * 0.05, 1e-3);
    EXPECT_GT(confidence_half_width(0, 100), 0.0);
    EXPECT_GT(confidence_half_width(100, 100), 0.0);
    EXPECT_LT(confidence_half_width(0, 100), 0.1);
}

TEST(LocalContinuity, IdentityIsZero) {
    const auto k = make_kernel("identity", 16);
    const auto e = estimate_local_continuity(k, 16, 0.1, 1.0, 0.5, default_x_grid(k, 1.0, 5), 50, 1);
    EXPECT_EQ(e.estimate, 0.0);
    EXPECT_EQ(e.condition, "iii-local-continuity");
    EXPECT_THROW(estimate_local_continuity(k, 16, 0.1, 1.0, 0.5, {}, 50, 1), std::invalid_argument);
    EXPECT_THROW(estimate_local_continuity(k, 16, 0.1, 1.0, 0.5, {{2.0}}, 50, 1), std::invalid_argument);
}

TEST(LocalContinuity, SrwMatchesConvolution) {
    for (int n : {16, 64, 256}) {
        const auto k = make_kernel("srw", n);
        const double h = 0.2, eps = 0.5;
        const auto e = estimate_local_continuity(k, n, eps, 1.0, h, {{0.0}}, 4000, 11);
        const int steps = static_cast<int>(std::floor(h * n + 1e-9));
        ASSERT_EQ(e.probabilities[0].size(), static_cast<std::size_t>(steps + 1));
        for (int j = 0; j <= steps; ++j) {
            const double exact = oracle::srw_tail(j, eps * std::sqrt(static_cast<double>(n)));
            EXPECT_NEAR(e.probabilities[0][j], exact, 1.5 * e.half_widths[0][j] + 1e-12) << "n " << n << " k " << j;
        }
    }
}

TEST(LocalContinuity, FixedJumpDetected) {
    const int n = 64;
    const auto k = make_kernel("fixed-jump", n);
    for (double h : {0.2, 0.1, 0.05}) {
        const auto e = estimate_local_continuity(k, n, 0.5, 1.0, h, default_x_grid(k, 1.0, 9), 50, 3);
        EXPECT_GE(e.estimate, 0.5) << h;
    }
}

TEST(GlobalBound, DriftAndSrw) {
    const auto drift = make_kernel("drift(1)", 16);
    const auto e = estimate_global_bound(drift, 16, 2, {1.5, 1.99, 2.01, 3.0}, 20, 1);
    EXPECT_EQ(e.probabilities[0][0], 1.0);
    EXPECT_EQ(e.probabilities[1][0], 1.0);
    EXPECT_EQ(e.probabilities[2][0], 0.0);
    EXPECT_EQ(e.probabilities[3][0], 0.0);

    const int n = 64;
    const auto srw = estimate_global_bound(make_kernel("srw", n), n, 1, {1.0, 2.0, 3.0}, 5000, 2);
    for (int i = 0; i < 3; ++i) {
        const double exact = oracle::srw_max_tail(n, (i + 1.0) * std::sqrt(static_cast<double>(n)));
        EXPECT_NEAR(srw.probabilities[i][0], exact, 1.5 * srw.half_widths[i][0] + 1e-12) << i;
        if (i > 0) EXPECT_LE(srw.probabilities[i][0], srw.probabilities[i - 1][0]);
    }
    EXPECT_LT(srw.probabilities[2][0], 0.01);
    EXPECT_THROW(estimate_global_bound(drift, 16, 0, {1.0}, 20, 1), std::invalid_argument);
}

TEST(ExtraSteps, RangeConventions) {
    const std::vector<Point> path = {{0.0}, {1.0}, {2.0}, {3.0}, {4.0}, {5.0}};
    // N_{4-} = 1, n - 1 = 3: the two embeddings disagree on Y_2 and Y_3.
    const PoissonPath clock({2.5}, 4.0);
    EXPECT_EQ(extra_steps_sup(path, clock, 4, ExtraStepsRange::Inclusive), 2.0);
    EXPECT_EQ(extra_steps_sup(path, clock, 4, ExtraStepsRange::Literal), 1.0);
    const PoissonPath exact({0.5, 1.5, 2.5}, 4.0);
    EXPECT_EQ(extra_steps_sup(path, exact, 4), 0.0);
}

TEST(ExtraSteps, UnitJumpMatchesPoisson) {
    const int n = 16;
    const auto e = estimate_extra_steps(make_kernel("unit-jump", n), n, 0.25, 5000, 4);
    const double exact = 1.0 - oracle::poisson_pmf(n, n - 1);
    EXPECT_NEAR(e.estimate, exact, 1.5 * e.half_width);
    EXPECT_EQ(estimate_extra_steps(make_kernel("identity", n), n, 0.25, 200, 4).estimate, 0.0);
}

TEST(Quantile, TypeOne) {
    const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
    EXPECT_EQ(empirical_quantile(v, 0.5), 2.0);
    EXPECT_EQ(empirical_quantile(v, 0.51), 3.0);
    EXPECT_EQ(empirical_quantile(v, 1.0), 4.0);
    EXPECT_EQ(empirical_quantile(v, 0.0), 1.0);
    EXPECT_THROW(empirical_quantile({}, 0.5), std::invalid_argument);
}

TEST(Probe, DriftAgainstIdentityLine) {
    ProbeConfig c;
    c.mode = ProbeMode::Reference;
    c.reference = CadlagFunction::ramp(0.0, 1.0);
    c.n_list = {4, 16, 64};
    c.replicas = 3;
    c.epsilon = 0.1;
    const auto r = convergence_probe("drift(1)", c);
    ASSERT_EQ(r.rows.size(), 3u);
    for (const auto& row : r.rows) EXPECT_LE(row.max, 1.0 / row.n + 1e-12);
    EXPECT_TRUE(r.pass);
}

TEST(Probe, MarkovBoundHolds) {
    ProbeConfig c;
    c.mode = ProbeMode::Markov;
    c.n_list = {16, 64};
    c.replicas = 200;
    c.epsilon = 0.5;
    c.seed = 8;
    const auto r = convergence_probe("srw", c);
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.bound_violations, 0) << row.n;
        for (std::size_t i = 1; i < row.distances.size(); ++i) EXPECT_LE(row.distances[i - 1], row.distances[i]);
        EXPECT_LE(row.q50, row.q90);
        EXPECT_LE(row.q90, row.q99);
        EXPECT_LE(row.q99, row.max);
    }
}

TEST(Probe, Reproducible) {
    ProbeConfig c;
    c.mode = ProbeMode::Embedding;
    c.embedding = Topology::M1;
    c.metric = Topology::J2;
    c.n_list = {16, 32};
    c.replicas = 30;
    c.seed = 5;
    const auto a = convergence_probe("srw", c), b = convergence_probe("srw", c);
    for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].distances, b.rows[i].distances);
}

TEST(FixedDiscontinuities, VanishForSrw) {
    const double eps = 0.3;
    const auto small = fixed_discontinuity_frequency(make_kernel("srw", 4), 4, eps, {0.25, 0.5, 0.75}, 500, 1);
    const auto large = fixed_discontinuity_frequency(make_kernel("srw", 64), 64, eps, {0.25, 0.5, 0.75}, 500, 1);
    EXPECT_GT(small.estimate, 0.5);
    EXPECT_EQ(large.estimate, 0.0);
}
