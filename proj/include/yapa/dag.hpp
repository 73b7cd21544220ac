#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "yapa/model.hpp"

namespace yapa {

enum class GeneratorKind { reference, accelerated };

/// Deterministic arcs layered on top of the random attachment rule.
/// genesis_fanout = k forces vertices 2..k+1 to carry the arc to vertex 1
/// (in addition to their random arcs, deduplicated); 0 means none.
struct InitialCondition {
    std::uint64_t genesis_fanout = 0;

    bool operator==(const InitialCondition&) const = default;
};

/// A grown young-age preferential-attachment DAG. Arcs point from newer to
/// older indices, so acyclicity holds by construction. arcs[v] is the sorted
/// out-arc target list of vertex v; slot 0 is reserved for the synthetic root
/// added by augment_root (rooted == true), in which case previously detached
/// vertices and vertex 1 carry an arc to vertex 0 and vertex 0 participates
/// in degree bookkeeping.
struct Dag {
    Params params;
    std::uint64_t seed = 0;
    GeneratorKind kind = GeneratorKind::reference;
    InitialCondition init;
    bool rooted = false;
    std::vector<std::vector<VertexId>> arcs;  // index = vertex id, slot 0 reserved

    explicit Dag(const Params& p) : params(p) {}

    std::uint64_t n_vertices() const {
        return arcs.empty() ? 0 : arcs.size() - 1;
    }

    std::uint64_t n_arcs() const {
        std::uint64_t total = 0;
        for (const auto& a : arcs) total += a.size();
        return total;
    }
};

/// Structural invariants: every arc target precedes its source (vertex 0
/// allowed as target only when rooted), target lists sorted and duplicate
/// free, genesis has no out-arcs in unaugmented graphs.
inline void check_invariants(const Dag& dag) {
    if (dag.arcs.empty()) throw std::logic_error("dag: missing vertex slots");
    if (!dag.arcs[0].empty()) throw std::logic_error("dag: root slot must have no out-arcs");
    for (VertexId v = 1; v <= dag.n_vertices(); ++v) {
        const auto& targets = dag.arcs[v];
        if (!std::is_sorted(targets.begin(), targets.end()))
            throw std::logic_error("dag: unsorted target list");
        if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
            throw std::logic_error("dag: duplicate arc");
        for (VertexId t : targets) {
            if (t >= v) throw std::logic_error("dag: arc does not point backwards");
            if (t == 0 && !dag.rooted) throw std::logic_error("dag: root arc in unrooted graph");
        }
    }
    if (!dag.rooted && !dag.arcs[1].empty())
        throw std::logic_error("dag: genesis must have no out-arcs");
}

}  // namespace yapa
