#include "yapa/connectivity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "yapa/degree_stats.hpp"
#include "yapa/generator.hpp"
#include "yapa/stats.hpp"
#include "test_util.hpp"

using namespace yapa;
using yapa::testing::make_chain;
using yapa::testing::make_dag;
using yapa::testing::reaches;

TEST(ForwardComponent, ChainAndIsolated) {
    const auto chain = make_chain(3);
    EXPECT_EQ(forward_component(chain, 1), (std::vector<VertexId>{1, 2, 3}));
    EXPECT_EQ(forward_component(chain, 3), (std::vector<VertexId>{3}));
    const auto dag = make_dag(4, {{2, 1}, {4, 3}});
    EXPECT_EQ(forward_component(dag, 3), (std::vector<VertexId>{3, 4}));
    EXPECT_EQ(forward_component(dag, 2), (std::vector<VertexId>{2}));
    EXPECT_THROW(forward_component(dag, 5), std::invalid_argument);
    EXPECT_THROW(forward_component(dag, 0), std::invalid_argument);  // not rooted
}

TEST(ForwardComponent, MatchesExhaustivePathEnumeration) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto dag = generate(Params(3, 1.2), 12, seed, {},
                                  seed % 2 ? GeneratorKind::reference
                                           : GeneratorKind::accelerated);
        for (VertexId m = 1; m <= 12; ++m) {
            const auto component = forward_component(dag, m);
            for (VertexId k = 1; k <= 12; ++k) {
                const bool in_component =
                    std::binary_search(component.begin(), component.end(), k);
                EXPECT_EQ(in_component, k >= m && reaches(dag, k, m))
                    << "seed=" << seed << " m=" << m << " k=" << k;
            }
        }
    }
}

TEST(TraceComponent, RootAtHorizonStaysEmpty) {
    const auto trace = trace_component(Params(4, 2), 100, 100, 7);
    ASSERT_EQ(trace.samples.size(), 1u);
    EXPECT_EQ(trace.samples[0].gamma, 0u);  // component counts references only
    EXPECT_DOUBLE_EQ(trace.samples[0].weight, 4.0);  // own weight alpha (m/m)^beta
}

TEST(TraceComponent, ConsistentWithOfflineComponentAtCheckpoints) {
    const Params p(4, 2);
    const std::uint64_t n_max = 2000, seed = 31, root = 11;
    const InitialCondition init{10};
    const auto kind = GeneratorKind::accelerated;
    const auto trace = trace_component(p, root, n_max, seed, init, kind, 1);
    const auto dag = generate(p, n_max, seed, init, kind);

    for (std::uint64_t checkpoint : {n_max / 4, n_max / 2, n_max}) {
        // truncating the arc lists to the first `checkpoint` vertices gives the
        // graph exactly as it was at that arrival (growth never edits history)
        Dag prefix(p);
        prefix.arcs.assign(dag.arcs.begin(), dag.arcs.begin() + checkpoint + 1);
        const auto offline = forward_component(prefix, root);
        const auto sample = std::find_if(trace.samples.begin(), trace.samples.end(),
                                         [&](const auto& s) { return s.n == checkpoint; });
        ASSERT_NE(sample, trace.samples.end());
        EXPECT_EQ(sample->gamma, offline.size() - 1);  // gamma excludes the root
        double weight = 0.0;
        for (VertexId l : offline) weight += vertex_weight(p, l, checkpoint);
        EXPECT_NEAR(sample->weight, weight, 1e-9 * std::max(1.0, weight));
    }
}

TEST(TraceComponent, GammaMonotoneAndBounded) {
    const auto trace = trace_component(Params(4, 2), 5, 3000, 77, {}, GeneratorKind::accelerated, 13);
    std::uint64_t prev = 0;
    for (const auto& s : trace.samples) {
        EXPECT_GE(s.gamma, prev);
        EXPECT_LE(s.gamma, s.n - trace.root);
        prev = s.gamma;
    }
}

TEST(DetachedSurface, Fixtures) {
    EXPECT_EQ(detached_surface(make_chain(10)).detached_count, 0u);
    const auto dag = make_dag(5, {{2, 1}, {4, 2}});  // 3 and 5 detached
    EXPECT_EQ(detached_surface(dag).detached_count, 2u);
    // alpha >= 1 forces the first arc, so N=2 never has a detached vertex
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        EXPECT_EQ(detached_surface(generate(Params(3, 2), 2, seed)).detached_count, 0u);
}

TEST(SurfaceProbability, SmallCasesAndLimit) {
    EXPECT_DOUBLE_EQ(surface_probability(Params(3, 2), 2), 0.0);  // forced arc
    EXPECT_NEAR(surface_probability(Params(0.5, 2), 2), 0.5, 1e-15);
    EXPECT_THROW(surface_probability(Params(3, 2), 1), std::invalid_argument);
    // limit e^{-alpha/(beta+1)} = e^{-1}
    EXPECT_NEAR(surface_probability(Params(3, 2), 1000000), std::exp(-1.0), 1e-4);
}

TEST(SurfaceProbability, ConnectivityDesignRule) {
    // alpha > log(200)(beta+1) keeps the detached fraction below 0.005
    for (const double beta : {1.0, 2.0, 3.0}) {
        const Params p(std::log(200.0) * (beta + 1.0) * 1.0001, beta);
        EXPECT_LT(std::exp(-p.alpha / (p.beta + 1.0)), 0.005);
        EXPECT_LT(surface_probability(p, 200000), 0.005);
    }
}

TEST(ExpectedDetachedFraction, MatchesDirectProduct) {
    for (const Params p : {Params(3, 2), Params(1.5, 0.7), Params(8, 1)}) {
        const std::uint64_t n = 2000;
        double direct = 0.0;
        for (std::uint64_t k = 2; k <= n; ++k) direct += surface_probability(p, k);
        direct /= static_cast<double>(n);
        EXPECT_NEAR(expected_detached_fraction(p, n), direct, 1e-12);
    }
    EXPECT_DOUBLE_EQ(expected_detached_fraction(Params(3, 2), 1), 0.0);
}

TEST(DetachedFraction, MonteCarloMatchesExactMean) {
    const Params p(3, 2);
    const std::uint64_t n = 20000;
    const double exact = expected_detached_fraction(p, n);
    RunningStats stats;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s =
            detached_surface(generate_accelerated(p, n, RngHandle(5150).child(seed).seed()));
        stats.add(static_cast<double>(s.detached_count) / static_cast<double>(n));
    }
    EXPECT_NEAR(stats.mean(), exact, 3.0 * stats.stderror());
}

TEST(DetachedFraction, DistributionallyMonotoneInAlpha) {
    // more edges, fewer detached vertices (statistical check, separate seeds)
    const std::uint64_t n = 20000;
    RunningStats lo, hi;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        lo.add(static_cast<double>(
            detached_surface(generate_accelerated(Params(2, 2), n, RngHandle(61).child(seed).seed()))
                .detached_count));
        hi.add(static_cast<double>(
            detached_surface(generate_accelerated(Params(4, 2), n, RngHandle(62).child(seed).seed()))
                .detached_count));
    }
    EXPECT_LT(hi.mean(), lo.mean());
}

TEST(TypicalComponentFractions, FixturesAndRange) {
    RngHandle rng(3);
    const auto single = typical_component_fractions(make_chain(1), 5, rng);
    for (double f : single) EXPECT_DOUBLE_EQ(f, 1.0);

    // chain: |C(U)| = N - U + 1, so every fraction is a multiple of 1/N
    const std::uint64_t n = 10;
    const auto chain = make_chain(n);
    const auto fractions = typical_component_fractions(chain, 2000, rng);
    RunningStats stats;
    for (double f : fractions) {
        EXPECT_GT(f, 0.0);
        EXPECT_LE(f, 1.0);
        const double scaled = f * static_cast<double>(n);
        EXPECT_NEAR(scaled, std::round(scaled), 1e-12);
        stats.add(f);
    }
    // E[(N-U+1)/N] = (N+1)/(2N)
    EXPECT_NEAR(stats.mean(), (n + 1.0) / (2.0 * n), 3.0 * stats.stderror());
}

TEST(AugmentRoot, FixturesAndRootedness) {
    const auto chain = make_chain(4);
    const auto rooted = augment_root(chain);
    EXPECT_TRUE(rooted.rooted);
    EXPECT_EQ(rooted.arcs[1], (std::vector<VertexId>{0}));  // only genesis gains the arc
    for (VertexId v = 2; v <= 4; ++v) EXPECT_EQ(rooted.arcs[v], chain.arcs[v]);
    EXPECT_NO_THROW(check_invariants(rooted));
    EXPECT_THROW(augment_root(rooted), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto dag = generate(Params(1.2, 2), 300, seed);
        const auto d = detached_surface(dag).detached_count;
        const auto aug = augment_root(dag);
        EXPECT_NO_THROW(check_invariants(aug));
        std::uint64_t root_indeg = 0;
        for (VertexId v = 1; v <= aug.n_vertices(); ++v)
            root_indeg += std::count(aug.arcs[v].begin(), aug.arcs[v].end(), VertexId{0});
        EXPECT_EQ(root_indeg, d + 1);  // detached vertices plus genesis
        // rooted: every vertex reaches the synthetic root
        EXPECT_EQ(forward_component(aug, 0).size(), aug.n_vertices() + 1);
    }
}

TEST(ClassifySurvival, BandsAroundFixedPoint) {
    const Params p(4, 2);
    const double y_star = solve_y_star(p);  // ~0.6059
    EXPECT_EQ(classify_survival(p, y_star), SurvivalLabel::survived);
    EXPECT_EQ(classify_survival(p, y_star / 2.0 + 1e-6), SurvivalLabel::survived);
    EXPECT_EQ(classify_survival(p, y_star / 10.0 - 1e-6), SurvivalLabel::died);
    EXPECT_EQ(classify_survival(p, y_star / 4.0), SurvivalLabel::undecided);
}
