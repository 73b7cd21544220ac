#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "yapa/dag.hpp"

namespace yapa {

inline constexpr std::uint64_t kUnreachable = ~std::uint64_t{0};

/// Hop distance from every vertex to the nearest genesis vertex, following
/// out-arcs. Returned vector is indexed by vertex id (slot 0 reserved,
/// kUnreachable). Genesis vertices have distance 0; vertices with no directed
/// path to the genesis set are marked kUnreachable. Single pass in arrival
/// order: dist(v) = 1 + min over out-arc targets.
inline std::vector<std::uint64_t> genesis_distances(const Dag& dag,
                                                    const std::vector<VertexId>& genesis) {
    if (genesis.empty())
        throw std::invalid_argument("genesis_distances: genesis set must be nonempty");
    const std::uint64_t n = dag.n_vertices();
    std::vector<std::uint64_t> dist(dag.arcs.size(), kUnreachable);
    for (VertexId g : genesis) {
        if (g < 1 || g > n)
            throw std::invalid_argument("genesis_distances: genesis vertex out of range");
        dist[g] = 0;
    }
    for (VertexId v = 1; v <= n; ++v) {
        if (dist[v] == 0) continue;
        std::uint64_t best = kUnreachable;
        for (VertexId t : dag.arcs[v])
            if (dist[t] != kUnreachable) best = std::min(best, dist[t]);
        if (best != kUnreachable) dist[v] = best + 1;
    }
    return dist;
}

/// Aggregate shortest-path shape statistics over the reachable vertices.
/// mean_hops is flagged undefined when nothing is reachable.
struct PathSummary {
    std::uint64_t reachable_count = 0;
    std::uint64_t unreachable_count = 0;
    std::uint64_t sum_hops = 0;
    double mean_hops = 0.0;
    std::uint64_t max_hops = 0;
    bool mean_defined = false;
};

/// Aggregates a distance vector as produced by genesis_distances (slot 0 is
/// skipped).
inline PathSummary path_summary(std::span<const std::uint64_t> distances) {
    PathSummary s;
    for (std::size_t v = 1; v < distances.size(); ++v) {
        if (distances[v] == kUnreachable) {
            ++s.unreachable_count;
            continue;
        }
        ++s.reachable_count;
        s.sum_hops += distances[v];
        s.max_hops = std::max(s.max_hops, distances[v]);
    }
    if (s.reachable_count > 0) {
        s.mean_hops = static_cast<double>(s.sum_hops) / static_cast<double>(s.reachable_count);
        s.mean_defined = true;
    }
    return s;
}

}  // namespace yapa
