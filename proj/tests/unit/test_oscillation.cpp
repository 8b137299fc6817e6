#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skorokhod/generators.hpp"
#include "skorokhod/oscillation.hpp"

using namespace skorokhod;

namespace {

CadlagFunction spike(double from, double to) { return CadlagFunction::scalar_step({0.0, from, to}, {0.0, 1.0, 0.0}); }

constexpr Topology kAll[] = {Topology::J1, Topology::J2, Topology::M1, Topology::M2};

}  // namespace

TEST(Gauges, JAndM) {
    const double x[] = {1.0}, lo[] = {0.0}, hi[] = {2.0}, far[] = {5.0};
    EXPECT_EQ(j_gauge(x, lo, hi), 1.0);
    EXPECT_EQ(m_gauge(x, lo, hi), 0.0);
    EXPECT_EQ(m_gauge(x, far, hi), 1.0);
    EXPECT_EQ(j_gauge(x, x, far), 0.0);

    const double p[] = {1.0, 1.0}, a[] = {0.0, 0.0}, b[] = {2.0, 2.0}, c[] = {2.0, 0.0};
    EXPECT_EQ(m_gauge(p, a, b), 0.0);
    EXPECT_DOUBLE_EQ(m_gauge(p, a, c), std::sqrt(2.0));
}

TEST(TripleSets, Membership) {
    EXPECT_TRUE(in_triple_set(TripleFamily::T1, 0.1, {0.5, 0.4, 0.6}));
    EXPECT_FALSE(in_triple_set(TripleFamily::T1, 0.1, {0.5, 0.39, 0.6}));
    EXPECT_FALSE(in_triple_set(TripleFamily::T1, 0.1, {0.5, 0.5, 0.6}));
    EXPECT_TRUE(in_triple_set(TripleFamily::T2, 0.1, {0.5, 0.42, 0.58}));
    EXPECT_FALSE(in_triple_set(TripleFamily::T2, 0.1, {0.5, 0.47, 0.58}));
    // Near 0 the left window is [0, delta/2] and may reach past t.
    EXPECT_FALSE(in_triple_set(TripleFamily::T2, 0.2, {0.05, 0.08, 0.2}));
    EXPECT_TRUE(in_triple_set(TripleFamily::T2, 0.2, {0.05, 0.08, 0.2}, T2Convention::Literal));
    EXPECT_EQ(family_of(Topology::M1), TripleFamily::T1);
    EXPECT_EQ(family_of(Topology::J2), TripleFamily::T2);
}

TEST(Oscillation, IndicatorHasNone) {
    const auto f = CadlagFunction::indicator(0.5);
    for (Topology t : kAll)
        for (double d : {0.01, 0.1, 0.5, 1.0}) EXPECT_EQ(oscillation(t, d, f).value, 0.0) << to_string(t) << " " << d;
}

TEST(Oscillation, SpikeDetectedOnlyWhenWindowSpansIt) {
    const auto f = spike(0.4, 0.45);
    for (Topology t : kAll) EXPECT_EQ(oscillation(t, 0.1, f).value, 1.0) << to_string(t);
    for (Topology t : kAll) EXPECT_EQ(oscillation(t, 0.02, f).value, 0.0) << to_string(t);
    const auto r = oscillation(Topology::J1, 0.1, f);
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(in_triple_set(TripleFamily::T1, 0.1, r.witness));
    EXPECT_EQ(f.evaluate(r.witness.t)[0], 1.0);
}

TEST(Oscillation, MonotoneStaircaseHasNoMOscillation) {
    const auto f = CadlagFunction::scalar_step({0.0, 0.3, 0.31, 0.6}, {0.0, 1.0, 2.0, 3.0});
    EXPECT_EQ(oscillation(Topology::M1, 0.2, f).value, 0.0);
    EXPECT_EQ(oscillation(Topology::M2, 0.2, f).value, 0.0);
    EXPECT_EQ(oscillation(Topology::J1, 0.2, f).value, 1.0);
}

TEST(Oscillation, ProfileMatchesSingleCalls) {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto f = gen::step_function(rng, 1, 10);
        const auto prof = oscillation_profile(0.1, f);
        for (Topology t : kAll) EXPECT_EQ(prof[static_cast<int>(t)].value, oscillation(t, 0.1, f).value);
    }
}

TEST(Oscillation, AgreesWithTripleEnumerationOracle) {
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = i % 3 == 2 ? 2 : 1;
        const auto f = i % 4 == 3 ? gen::near_jump_pair(rng, d, 0.1) : gen::step_function(rng, d, 8);
        for (double delta : {0.01, 0.05, 0.1, 0.25, 0.5}) {
            for (Topology t : kAll) {
                SCOPED_TRACE(testing::Message() << "case " << i << " delta " << delta << " " << to_string(t));
                EXPECT_NEAR(oscillation(t, delta, f).value, oracle::oscillation(t, delta, f), 1e-12);
            }
            OscillationOptions literal;
            literal.t2 = T2Convention::Literal;
            EXPECT_NEAR(oscillation(Topology::J2, delta, f, literal).value,
                        oracle::oscillation(Topology::J2, delta, f, T2Convention::Literal), 1e-12);
        }
    }
}

TEST(Oscillation, LinearPiecesAreBracketed) {
    Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        const auto f = gen::piecewise_linear(rng, 1, 5);
        for (Topology t : {Topology::J1, Topology::M1}) {
            const auto r = oscillation(t, 0.1, f);
            ASSERT_TRUE(std::isfinite(r.error_bound));
            // Random triples never beat value + error bound.
            for (int k = 0; k < 2000; ++k) {
                const double s = rng.uniform();
                const double s1 = std::max(0.0, s - 0.1 * rng.uniform());
                const double s2 = std::min(1.0, s + 0.1 * rng.uniform());
                if (!(s1 < s && s < s2)) continue;
                const auto x = f.evaluate(s), x1 = f.evaluate(s1), x2 = f.evaluate(s2);
                const double g = t == Topology::J1 ? j_gauge(x, x1, x2) : m_gauge(x, x1, x2);
                EXPECT_LE(g, r.value + r.error_bound + 1e-12);
            }
        }
    }
}

TEST(BoundaryOscillation, SumsBothEnds) {
    const auto f = CadlagFunction::indicator(0.5);
    EXPECT_EQ(boundary_oscillation(0.6, f), 2.0);
    EXPECT_EQ(boundary_oscillation(0.5, f), 0.0);
    const auto g = CadlagFunction::ramp(0.0, 1.0);
    EXPECT_DOUBLE_EQ(boundary_oscillation(0.25, g), 0.5);
    EXPECT_THROW(boundary_oscillation(0.0, g), std::invalid_argument);
}

TEST(Oscillation, TopologyNames) {
    for (Topology t : kAll) EXPECT_EQ(parse_topology(to_string(t)), t);
    EXPECT_EQ(parse_topology("m2"), Topology::M2);
    EXPECT_THROW(parse_topology("J3"), std::invalid_argument);
}
