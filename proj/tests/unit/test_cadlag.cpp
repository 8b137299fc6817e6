#include <gtest/gtest.h>

#include <cmath>

#include "skorokhod/cadlag.hpp"
#include "skorokhod/generators.hpp"

using namespace skorokhod;

TEST(Cadlag, StepEvaluatesRightContinuously) {
    const auto f = CadlagFunction::scalar_step({0.0, 0.25, 0.5}, {1.0, 2.0, 3.0});
    EXPECT_EQ(f.evaluate(0.0)[0], 1.0);
    EXPECT_EQ(f.evaluate(0.25)[0], 2.0);
    EXPECT_EQ(f.evaluate(0.4999)[0], 2.0);
    EXPECT_EQ(f.evaluate(0.5)[0], 3.0);
    EXPECT_EQ(f.evaluate(1.0)[0], 3.0);
    EXPECT_EQ(f.left_limit(0.25).value[0], 1.0);
    EXPECT_EQ(f.left_limit(0.5).value[0], 2.0);
    EXPECT_FALSE(f.left_limit(0.5).degenerate);
    EXPECT_TRUE(f.left_limit(0.0).degenerate);
}

TEST(Cadlag, TerminalValueIsLeftLimitAtOne) {
    CadlagFunction f(1, {0.0, 0.5}, {CadlagFunction::Piece::constant({0.0}), CadlagFunction::Piece::ramp({0.0}, {2.0})});
    EXPECT_EQ(f.terminal_value()[0], 2.0);
    EXPECT_EQ(f.evaluate(1.0)[0], 2.0);
    EXPECT_DOUBLE_EQ(f.evaluate(0.75)[0], 1.0);
    EXPECT_DOUBLE_EQ(f.left_limit(1.0).value[0], 2.0);
}

TEST(Cadlag, CanonicalizesEqualPieces) {
    const auto f = CadlagFunction::scalar_step({0.0, 0.3, 0.6}, {1.0, 1.0, 2.0});
    EXPECT_EQ(f.piece_count(), 2u);
    EXPECT_EQ(f.breakpoints()[1], 0.6);

    CadlagFunction g(1, {0.0, 0.5}, {CadlagFunction::Piece::ramp({1.0}, {1.0}), CadlagFunction::Piece::constant({1.0})});
    EXPECT_EQ(g.piece_count(), 1u);
    EXPECT_TRUE(g.is_piecewise_constant());
}

TEST(Cadlag, RejectsMalformedInput) {
    using P = CadlagFunction::Piece;
    EXPECT_THROW(CadlagFunction(1, {0.1}, {P::constant({0.0})}), std::invalid_argument);
    EXPECT_THROW(CadlagFunction(1, {0.0, 0.5, 0.5}, {P::constant({0.0}), P::constant({1.0}), P::constant({2.0})}),
                 std::invalid_argument);
    EXPECT_THROW(CadlagFunction(1, {0.0, 1.0}, {P::constant({0.0}), P::constant({1.0})}), std::invalid_argument);
    EXPECT_THROW(CadlagFunction(2, {0.0}, {P::constant({0.0})}), std::invalid_argument);
    EXPECT_THROW(CadlagFunction(1, {0.0}, {P::constant({NAN})}), std::invalid_argument);
    EXPECT_THROW(CadlagFunction(1, {0.0}, {P{{0.0}, {1.0}, false}}), std::invalid_argument);
    EXPECT_THROW(CadlagFunction::indicator(1.0), std::invalid_argument);
    const auto f = CadlagFunction::indicator(0.5);
    EXPECT_THROW(f.evaluate(1.5), std::out_of_range);
    EXPECT_THROW(f.evaluate(-0.1), std::out_of_range);
}

TEST(Cadlag, GraphsSeparateJumpEndpoints) {
    const auto f = CadlagFunction::indicator(0.5);
    const auto inc = incomplete_graph(f);
    const auto com = completed_graph(f);
    ASSERT_EQ(inc.vertices().size(), 4u);
    ASSERT_EQ(com.vertices().size(), 4u);
    EXPECT_EQ(inc.segments().size(), 2u);
    EXPECT_EQ(com.segments().size(), 3u);
    EXPECT_TRUE(respects_graph_order(f, com));
    EXPECT_TRUE(on_completed_graph(f, {{0.3}, 0.5}));
    EXPECT_FALSE(on_completed_graph(f, {{0.3}, 0.6}));
}

TEST(Cadlag, ParametricRepresentationIsMonotone) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto f = gen::step_function(rng, 1, 8);
        const auto rep = parametric_representation(completed_graph(f));
        ASSERT_EQ(rep.params.front(), 0.0);
        ASSERT_EQ(rep.params.back(), 1.0);
        for (std::size_t k = 1; k < rep.points.size(); ++k) {
            EXPECT_LE(rep.params[k - 1], rep.params[k]);
            EXPECT_LE(rep.points[k - 1].time, rep.points[k].time);
        }
        for (double s : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) EXPECT_TRUE(on_completed_graph(f, rep.evaluate(s), 1e-9));
    }
}

TEST(TimeChange, InterpolatesAndInverts) {
    TimeChange lambda({{0.0, 0.0}, {0.5, 0.25}, {1.0, 1.0}});
    EXPECT_DOUBLE_EQ(lambda(0.25), 0.125);
    EXPECT_DOUBLE_EQ(lambda(0.75), 0.625);
    EXPECT_DOUBLE_EQ(lambda.inverse(0.625), 0.75);
    EXPECT_DOUBLE_EQ(lambda.sup_deviation(), 0.25);
    EXPECT_EQ(TimeChange::identity().sup_deviation(), 0.0);
    EXPECT_THROW(TimeChange({{0.0, 0.0}, {0.5, 0.5}, {0.5, 0.7}, {1.0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(TimeChange({{0.0, 0.1}, {1.0, 1.0}}), std::invalid_argument);
}

TEST(Cadlag, ComposeMatchesPointwise) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen::piecewise_linear(rng, 1, 6);
        const double a = 0.1 + 0.8 * rng.uniform();
        const double b = 0.1 + 0.8 * rng.uniform();
        TimeChange lambda({{0.0, 0.0}, {a, b}, {1.0, 1.0}});
        const auto h = compose(f, lambda);
        for (int k = 0; k <= 50; ++k) {
            const double t = k / 50.0;
            EXPECT_NEAR(h.evaluate(t)[0], f.evaluate(std::min(1.0, lambda(t)))[0], 1e-9) << "t = " << t;
        }
    }
}

TEST(Cadlag, RestrictRescalesTime) {
    CadlagFunction f(1, {0.0, 0.5}, {CadlagFunction::Piece::ramp({0.0}, {1.0}), CadlagFunction::Piece::constant({5.0})});
    const auto r = restrict_to(f, 0.5);
    EXPECT_DOUBLE_EQ(r.evaluate(0.5)[0], 0.5);
    EXPECT_DOUBLE_EQ(r.terminal_value()[0], 1.0);
    const auto s = restrict_to(f, 0.75);
    EXPECT_EQ(s.evaluate(1.0)[0], 5.0);
    EXPECT_DOUBLE_EQ(s.evaluate(1.0 / 3.0)[0], 0.5);
}

TEST(Cadlag, SupDistanceIncludesLeftLimits) {
    const auto f = CadlagFunction::ramp(0.0, 1.0);
    const auto g = CadlagFunction::constant({0.0});
    EXPECT_EQ(sup_distance(f, g), 1.0);
    const auto h = CadlagFunction::indicator(0.5);
    EXPECT_DOUBLE_EQ(sup_distance(f, h), 0.5);
}

TEST(Cadlag, SupDistanceDominatesSamples) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen::piecewise_linear(rng, 2, 5);
        const auto g = gen::piecewise_linear(rng, 2, 5);
        const double d = sup_distance(f, g);
        double sampled = 0.0;
        for (int k = 0; k <= 400; ++k) sampled = std::max(sampled, distance(f.evaluate(k / 400.0), g.evaluate(k / 400.0)));
        EXPECT_GE(d + 1e-12, sampled);
    }
}

TEST(Cadlag, ProjectTakesDotProduct) {
    const auto f = CadlagFunction::step({0.0, 0.5}, {{1.0, 2.0}, {3.0, -1.0}});
    const double eta[] = {1.0, 1.0};
    const auto p = project(f, eta);
    EXPECT_EQ(p.dimension(), 1u);
    EXPECT_EQ(p.evaluate(0.0)[0], 3.0);
    EXPECT_EQ(p.evaluate(0.7)[0], 2.0);
}
