#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yapa/dag.hpp"
#include "yapa/model.hpp"
#include "yapa/rng.hpp"

namespace yapa {

/// Receives (vertex index, its out-arcs) exactly once per added vertex, in
/// arrival order. Vertex 1 is reported with an empty arc list.
template <typename F>
concept GrowthObserver = std::invocable<F&, VertexId, std::span<const VertexId>>;

namespace detail {

/// Samples the out-arc targets of arriving vertex n into `targets` (ascending).
/// `pow_beta[i]` must hold i^beta for i <= n-1. The accelerated path draws
/// candidates by geometric skips at the uniform rate q = alpha/(n-1) and thins
/// them with the age factor (m/(n-1))^beta, which reproduces the independent
/// per-pair Bernoulli law; where q >= 1 the thinning bound is useless and the
/// exact per-pair sweep is used instead.
inline void sample_arcs(const Params& p, VertexId n, GeneratorKind kind,
                        std::span<const double> pow_beta, RngHandle& rng,
                        std::vector<VertexId>& targets) {
    targets.clear();
    const std::uint64_t d = n - 1;
    const double q = p.alpha / static_cast<double>(d);
    if (kind == GeneratorKind::reference || q >= 1.0) {
        const double scale = q / pow_beta[d];
        for (VertexId m = 1; m <= d; ++m) {
            const double prob = scale * pow_beta[m];
            if (rng.uniform01() < (prob < 1.0 ? prob : 1.0)) targets.push_back(m);
        }
        return;
    }
    std::uint64_t m = 0;
    for (;;) {
        const std::uint64_t skip = rng.geometric_skip(q);
        if (skip >= d - m) break;
        m += skip + 1;
        if (rng.uniform01() < pow_beta[m] / pow_beta[d]) targets.push_back(m);
        if (m == d) break;
    }
}

inline void apply_initial_condition(const InitialCondition& init, VertexId n,
                                    std::vector<VertexId>& targets) {
    if (init.genesis_fanout == 0 || n < 2 || n > init.genesis_fanout + 1) return;
    if (targets.empty() || targets.front() != 1) targets.insert(targets.begin(), 1);
}

}  // namespace detail

/// Grows a graph of `n_vertices` vertices under the attachment rule and feeds
/// every vertex to `observe` without storing arcs. Deterministic in
/// (p, n_vertices, seed, init, kind). Expected work O(alpha * N) for the
/// accelerated kind, O(N^2) for the reference kind.
template <GrowthObserver F>
void stream_growth(const Params& p, std::uint64_t n_vertices, std::uint64_t seed,
                   InitialCondition init, GeneratorKind kind, F&& observe) {
    if (n_vertices == 0)
        throw std::invalid_argument("stream_growth: n_vertices must be >= 1");
    RngHandle rng(seed);
    std::vector<double> pow_beta(n_vertices);  // pow_beta[i] = i^beta, i < n_vertices
    for (std::uint64_t i = 1; i < n_vertices; ++i)
        pow_beta[i] = std::pow(static_cast<double>(i), p.beta);

    std::vector<VertexId> targets;
    observe(VertexId{1}, std::span<const VertexId>{});
    for (VertexId n = 2; n <= n_vertices; ++n) {
        detail::sample_arcs(p, n, kind, pow_beta, rng, targets);
        detail::apply_initial_condition(init, n, targets);
        observe(n, std::span<const VertexId>{targets});
    }
}

/// Grows and stores the full graph; forwards every step to `observe`.
template <GrowthObserver F>
Dag generate(const Params& p, std::uint64_t n_vertices, std::uint64_t seed,
             InitialCondition init, GeneratorKind kind, F&& observe) {
    Dag dag(p);
    dag.seed = seed;
    dag.kind = kind;
    dag.init = init;
    dag.arcs.resize(n_vertices + 1);
    stream_growth(p, n_vertices, seed, init, kind,
                  [&](VertexId n, std::span<const VertexId> targets) {
                      dag.arcs[n].assign(targets.begin(), targets.end());
                      observe(n, targets);
                  });
    return dag;
}

inline Dag generate(const Params& p, std::uint64_t n_vertices, std::uint64_t seed,
                    InitialCondition init = {},
                    GeneratorKind kind = GeneratorKind::accelerated) {
    return generate(p, n_vertices, seed, init, kind,
                    [](VertexId, std::span<const VertexId>) {});
}

inline Dag generate_accelerated(const Params& p, std::uint64_t n_vertices,
                                std::uint64_t seed, InitialCondition init = {}) {
    return generate(p, n_vertices, seed, init, GeneratorKind::accelerated);
}

/// Appends one vertex to an existing graph, drawing from the caller's stream.
/// Returns the arcs added. Uses the exact per-pair sweep.
inline std::vector<VertexId> grow_step(Dag& dag, RngHandle& rng) {
    if (dag.arcs.size() < 2) throw std::invalid_argument("grow_step: dag is empty");
    if (dag.rooted) throw std::invalid_argument("grow_step: cannot grow an augmented dag");
    const VertexId n = dag.n_vertices() + 1;
    std::vector<VertexId> targets;
    const std::uint64_t d = n - 1;
    const double q = dag.params.alpha / static_cast<double>(d);
    const double db = std::pow(static_cast<double>(d), dag.params.beta);
    for (VertexId m = 1; m <= d; ++m) {
        const double prob = q * std::pow(static_cast<double>(m), dag.params.beta) / db;
        if (rng.uniform01() < (prob < 1.0 ? prob : 1.0)) targets.push_back(m);
    }
    detail::apply_initial_condition(dag.init, n, targets);
    dag.arcs.push_back(targets);
    return targets;
}

}  // namespace yapa
