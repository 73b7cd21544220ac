#include "yapa/generator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "yapa/degree_stats.hpp"
#include "yapa/stats.hpp"
#include "test_util.hpp"

using namespace yapa;

TEST(Generate, SingleVertexBaseCase) {
    const auto dag = generate(Params(3, 2), 1, 7);
    EXPECT_EQ(dag.n_vertices(), 1u);
    EXPECT_EQ(dag.n_arcs(), 0u);
    check_invariants(dag);
}

TEST(Generate, RejectsEmptyGraph) {
    EXPECT_THROW(generate(Params(3, 2), 0, 7), std::invalid_argument);
}

TEST(Generate, SecondVertexForcedWhenAlphaLarge) {
    // alpha >= 1 truncates the first attachment probability to 1
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto dag = generate(Params(3, 2), 2, seed);
        ASSERT_EQ(dag.arcs[2], std::vector<VertexId>{1});
    }
}

TEST(Generate, DeterministicPerSeed) {
    for (const auto kind : {GeneratorKind::reference, GeneratorKind::accelerated}) {
        const auto a = generate(Params(2.5, 1.5), 400, 99, {.genesis_fanout = 5}, kind);
        const auto b = generate(Params(2.5, 1.5), 400, 99, {.genesis_fanout = 5}, kind);
        EXPECT_EQ(a.arcs, b.arcs);
        const auto c = generate(Params(2.5, 1.5), 400, 100, {.genesis_fanout = 5}, kind);
        EXPECT_NE(a.arcs, c.arcs);
    }
}

TEST(Generate, StructuralInvariantsOnRandomGraphs) {
    for (const auto kind : {GeneratorKind::reference, GeneratorKind::accelerated}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto dag = generate(Params(4, 2), 300, seed, {.genesis_fanout = 10}, kind);
            EXPECT_NO_THROW(check_invariants(dag));
        }
    }
}

TEST(Generate, ObserverSeesEveryVertexOnceInOrder) {
    std::vector<VertexId> order;
    std::uint64_t arc_total = 0;
    const auto dag = generate(Params(3, 2), 200, 5, {}, GeneratorKind::accelerated,
                              [&](VertexId n, std::span<const VertexId> targets) {
                                  order.push_back(n);
                                  arc_total += targets.size();
                              });
    ASSERT_EQ(order.size(), 200u);
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i + 1);
    EXPECT_EQ(arc_total, dag.n_arcs());
}

TEST(Generate, GenesisFanoutForcesArcsAndDeduplicates) {
    const auto dag = generate(Params(3, 2), 50, 21, {.genesis_fanout = 10},
                              GeneratorKind::accelerated);
    for (VertexId v = 2; v <= 11; ++v) {
        ASSERT_FALSE(dag.arcs[v].empty());
        EXPECT_EQ(dag.arcs[v].front(), 1u);
        EXPECT_NO_THROW(check_invariants(dag));  // no duplicate 1s
    }
}

TEST(GrowStep, AppendsOneVertex) {
    auto dag = generate(Params(3, 2), 1, 7);
    RngHandle rng(13);
    const auto arcs = grow_step(dag, rng);
    EXPECT_EQ(dag.n_vertices(), 2u);
    EXPECT_EQ(dag.arcs[2], arcs);
    ASSERT_EQ(arcs.size(), 1u);  // min(alpha, 1) = 1 coin
    EXPECT_EQ(arcs[0], 1u);
}

TEST(GrowStep, MeanOutDegreeMatchesExactSum) {
    // new vertex's out-degree over replicates has mean sum_i p_k(i)
    const Params p(3, 2);
    auto base = generate(p, 29, 3);
    const double expected = expected_outdegree(p, 30);
    RngHandle rng(1234);
    RunningStats stats;
    for (int rep = 0; rep < 20000; ++rep) {
        auto dag = base;
        stats.add(static_cast<double>(grow_step(dag, rng).size()));
    }
    EXPECT_NEAR(stats.mean(), expected, 3.0 * stats.stderror());
}

TEST(Generate, PairMarginalMatchesAttachmentProbability) {
    // frequency of the arc 400 -> 100 across replicates vs the closed form
    const Params p(3, 2);
    const double prob = attachment_probability(p, 100, 400);
    const int reps = 10000;
    int hits = 0;
    for (int rep = 0; rep < reps; ++rep) {
        const auto dag = generate_accelerated(p, 500, RngHandle(555).child(rep).seed());
        const auto& t = dag.arcs[400];
        hits += std::binary_search(t.begin(), t.end(), VertexId{100}) ? 1 : 0;
    }
    const double freq = static_cast<double>(hits) / reps;
    const double se = std::sqrt(prob * (1.0 - prob) / reps);
    EXPECT_NEAR(freq, prob, 3.0 * se);
}

TEST(Generate, ReferenceAndAcceleratedAgreeOnEdgeCounts) {
    const Params p(3, 2);
    RunningStats ref, acc;
    for (int rep = 0; rep < 40; ++rep) {
        ref.add(static_cast<double>(
            generate(p, 2000, RngHandle(71).child(rep).seed(), {}, GeneratorKind::reference)
                .n_arcs()));
        acc.add(static_cast<double>(
            generate(p, 2000, RngHandle(72).child(rep).seed(), {}, GeneratorKind::accelerated)
                .n_arcs()));
    }
    const double se = std::sqrt(ref.variance() / ref.count() + acc.variance() / acc.count());
    EXPECT_NEAR(ref.mean(), acc.mean(), 3.0 * se);
}

TEST(Generate, OutDegreesOfDistinctVerticesUncorrelated) {
    const Params p(3, 2);
    const int reps = 4000;
    std::vector<double> d5(reps), d20(reps);
    for (int rep = 0; rep < reps; ++rep) {
        const auto dag = generate_accelerated(p, 40, RngHandle(88).child(rep).seed());
        d5[rep] = static_cast<double>(dag.arcs[5].size());
        d20[rep] = static_cast<double>(dag.arcs[20].size());
    }
    const double mean5 = std::accumulate(d5.begin(), d5.end(), 0.0) / reps;
    const double mean20 = std::accumulate(d20.begin(), d20.end(), 0.0) / reps;
    double cov = 0.0, var5 = 0.0, var20 = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        cov += (d5[rep] - mean5) * (d20[rep] - mean20);
        var5 += (d5[rep] - mean5) * (d5[rep] - mean5);
        var20 += (d20[rep] - mean20) * (d20[rep] - mean20);
    }
    cov /= reps - 1;
    var5 /= reps - 1;
    var20 /= reps - 1;
    const double se = std::sqrt(var5 * var20 / reps);
    EXPECT_NEAR(cov, 0.0, 4.0 * se);
}
