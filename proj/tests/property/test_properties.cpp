#include <gtest/gtest.h>

#include "skorokhod/embeddings.hpp"
#include "skorokhod/generators.hpp"
#include "skorokhod/metrics.hpp"
#include "skorokhod/oscillation.hpp"

using namespace skorokhod;

namespace {

constexpr double kDeltas[] = {0.01, 0.05, 0.1, 0.25, 0.5};

CadlagFunction draw(Rng& rng, int i) {
    const std::size_t d = i % 2 + 1;
    switch (i % 4) {
        case 0: return gen::step_function(rng, d, 20);
        case 1: return gen::random_walk(rng, d, 20);
        case 2: return gen::near_jump_pair(rng, d, kDeltas[i % 5]);
        default: return gen::piecewise_linear(rng, d, 6);
    }
}

}  // namespace

TEST(Properties, OscillationChain) {
    Rng rng(101);
    for (int i = 0; i < 400; ++i) {
        const auto f = draw(rng, i);
        for (double delta : kDeltas) {
            const auto p = oscillation_profile(delta, f);
            const double j1 = p[0].value, j2 = p[1].value, m1 = p[2].value, m2 = p[3].value;
            // Linear pieces are bracketed, so allow their stated error.
            double slack = 1e-12;
            for (const auto& r : p) slack = std::max(slack, r.error_bound);
            SCOPED_TRACE(testing::Message() << "case " << i << " delta " << delta);
            EXPECT_LE(m2, j2 + slack);
            EXPECT_LE(m2, m1 + slack);
            EXPECT_LE(j2, j1 + slack);
            EXPECT_LE(m1, j1 + slack);
            EXPECT_LE(j1, m1 + j2 + slack);
        }
    }
}

// Only the T1 family grows with delta; the T2 half-windows move with it.
TEST(Properties, OscillationMonotoneInDelta) {
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen::step_function(rng, 1, 12);
        for (Topology t : {Topology::J1, Topology::M1}) {
            double prev = 0.0;
            for (double delta : kDeltas) {
                const double v = oscillation(t, delta, f).value;
                EXPECT_GE(v + 1e-12, prev) << i;
                prev = v;
            }
        }
    }
}

TEST(Properties, HausdorffMetricAxioms) {
    Rng rng(103);
    for (int i = 0; i < 150; ++i) {
        const std::size_t d = i % 2 + 1;
        const auto f = gen::step_function(rng, d, 6), g = gen::step_function(rng, d, 6), h = gen::piecewise_linear(rng, d, 4);
        for (auto dist : {&d_j2, &d_m2}) {
            const double fg = dist(f, g, GraphNorm::Box).value, gf = dist(g, f, GraphNorm::Box).value;
            const double gh = dist(g, h, GraphNorm::Box).value, fh = dist(f, h, GraphNorm::Box).value;
            EXPECT_NEAR(fg, gf, 1e-9);
            EXPECT_LE(fh, fg + gh + 1e-9);
            EXPECT_EQ(dist(f, f, GraphNorm::Box).value, 0.0);
        }
    }
}

TEST(Properties, J1DominatesAndIsSymmetric) {
    Rng rng(104);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen::step_function(rng, 1, 5), g = gen::step_function(rng, 1, 5);
        const auto fg = d_j1(f, g), gf = d_j1(g, f);
        EXPECT_NEAR(fg.value, gf.value, 2e-9);
        EXPECT_GE(fg.value + 1e-12, d_j2(f, g).value);
        EXPECT_GE(fg.value + 1e-12, d_m2(f, g).value);
        EXPECT_LE(fg.value, sup_distance(f, g) + 1e-12);
    }
}

TEST(Properties, EmbeddingBoundsWithRandomPolicies) {
    Rng rng(105);
    for (int i = 0; i < 80; ++i) {
        const int n = gen::uniform_int(rng, 1, 40);
        SequenceData seq;
        seq.n = n;
        for (int k = 0; k < n; ++k) seq.values.push_back({gen::uniform(rng, -1.0, 1.0)});
        ChooserPolicy p;
        p.j2 = {{0.0, false}, {gen::uniform(rng, 0.05, 0.95), true}};
        const double w = rng.uniform();
        p.m2 = {{0.0, 0.0, w}, {0.5, w, rng.uniform()}};
        const auto j1 = embed(seq, Topology::J1);
        EXPECT_LE(d_j2(embed(seq, Topology::J2, p), j1).value, 1.0 / n + 1e-12);
        EXPECT_LE(d_m2(embed(seq, Topology::M2, p), j1).value, 1.0 / n + 1e-12);
        EXPECT_LE(d_m2(embed(seq, Topology::M1), j1).value, 1.0 / n + 1e-12);
    }
}

TEST(Properties, J1ConvergenceImpliesTheRest) {
    // Monotone walks with steps of size 1/n converge to the identity line in
    // J1, hence in every topology.
    const auto line = CadlagFunction::ramp(0.0, 1.0);
    for (int n : {8, 32, 128}) {
        SequenceData seq;
        seq.n = n;
        for (int k = 0; k < n; ++k) seq.values.push_back({static_cast<double>(k) / n});
        for (Topology t : {Topology::J1, Topology::J2, Topology::M1, Topology::M2}) {
            const auto x = embed(seq, t);
            for (Topology m : {Topology::J1, Topology::J2, Topology::M1, Topology::M2})
                EXPECT_LE(distance(m, x, line).value, 2.0 / n + 1e-12) << to_string(t) << " " << to_string(m) << " " << n;
        }
    }
}
