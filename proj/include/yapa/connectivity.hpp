#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "yapa/dag.hpp"
#include "yapa/generator.hpp"
#include "yapa/model.hpp"
#include "yapa/rng.hpp"
#include "yapa/theory.hpp"

namespace yapa {

/// Vertices with a directed path to m, plus m itself, in ascending order.
/// Single forward pass over arrival order: k belongs iff k == m or one of its
/// out-arc targets already belongs. O(V + E).
inline std::vector<VertexId> forward_component(const Dag& dag, VertexId m) {
    const std::uint64_t n = dag.n_vertices();
    if (m > n || (m == 0 && !dag.rooted))
        throw std::invalid_argument("forward_component: vertex out of range");
    std::vector<bool> member(dag.arcs.size(), false);
    std::vector<VertexId> component;
    member[m] = true;
    component.push_back(m);
    for (VertexId k = m + 1; k <= n; ++k) {
        for (VertexId t : dag.arcs[k]) {
            if (member[t]) {
                member[k] = true;
                component.push_back(k);
                break;
            }
        }
    }
    return component;
}

/// Online record of a tracked root's forward component: gamma excludes the
/// root itself (gamma_n = |C_n(root)| - 1), weight_n = sum over members of
/// alpha (l/n)^beta.
struct ComponentSample {
    std::uint64_t n;
    std::uint64_t gamma;
    double weight;
};

struct ComponentTrace {
    VertexId root;
    Params params;
    std::vector<ComponentSample> samples;
};

/// Grows a fresh graph (deterministic in the arguments, same stream as
/// generate) and tracks the root's forward component online with O(N) bits of
/// membership state. Samples every `stride` arrivals from the root on; the
/// terminal step is always sampled.
inline ComponentTrace trace_component(const Params& p, VertexId root,
                                      std::uint64_t n_max, std::uint64_t seed,
                                      InitialCondition init = {},
                                      GeneratorKind kind = GeneratorKind::accelerated,
                                      std::uint64_t stride = 1) {
    if (root < 1 || n_max < root)
        throw std::invalid_argument("trace_component: need 1 <= root <= n_max");
    if (stride < 1) stride = 1;
    ComponentTrace trace{root, p, {}};
    std::vector<bool> member(n_max + 1, false);
    std::uint64_t gamma = 0;
    double sum_pow = 0.0;  // sum of l^beta over members
    stream_growth(p, n_max, seed, init, kind,
                  [&](VertexId n, std::span<const VertexId> targets) {
                      if (n < root) return;
                      if (n == root) {
                          member[n] = true;
                          sum_pow = std::pow(static_cast<double>(n), p.beta);
                      } else {
                          for (VertexId t : targets) {
                              if (member[t]) {
                                  member[n] = true;
                                  ++gamma;
                                  sum_pow += std::pow(static_cast<double>(n), p.beta);
                                  break;
                              }
                          }
                      }
                      if ((n - root) % stride == 0 || n == n_max) {
                          const double w =
                              p.alpha * sum_pow / std::pow(static_cast<double>(n), p.beta);
                          trace.samples.push_back({n, gamma, w});
                      }
                  });
    return trace;
}

/// Survival label for a supercritical trace, from the terminal W_n/n against
/// the weight fixed point: survived above y*/2, died below y*/10, undecided
/// in between.
enum class SurvivalLabel { survived, died, undecided };

inline SurvivalLabel classify_survival(const Params& p, double terminal_weight_over_n) {
    const double y_star = solve_y_star(p);
    if (terminal_weight_over_n > y_star / 2.0) return SurvivalLabel::survived;
    if (terminal_weight_over_n < y_star / 10.0) return SurvivalLabel::died;
    return SurvivalLabel::undecided;
}

/// Count of vertices in {2..N} with no out-arcs.
struct SurfaceStats {
    std::uint64_t detached_count = 0;
    std::uint64_t n_vertices = 0;
};

inline SurfaceStats detached_surface(const Dag& dag) {
    SurfaceStats s;
    s.n_vertices = dag.n_vertices();
    for (VertexId v = 2; v <= s.n_vertices; ++v)
        if (dag.arcs[v].empty()) ++s.detached_count;
    return s;
}

/// Probability that arriving vertex k attaches to nothing: the exact product
/// prod_{i<k} (1 - p_k(i)). Tends to e^{-alpha/(beta+1)}.
inline double surface_probability(const Params& p, VertexId k) {
    if (k < 2) throw std::invalid_argument("surface_probability: need k >= 2");
    if (static_cast<double>(k - 1) <= p.alpha) return 0.0;  // some factor hits 1
    const double d = static_cast<double>(k - 1);
    double log_prod = 0.0;
    for (VertexId i = 1; i < k; ++i) {
        const double prob = p.alpha / d * std::pow(static_cast<double>(i) / d, p.beta);
        log_prod += std::log1p(-prob);
    }
    return std::exp(log_prod);
}

/// Exact expected detached fraction (1/N) sum_{k=2}^{N} p'_k. The log of each
/// product is expanded as -sum_j q^j T_j / j with q = alpha/(k-1) and
/// normalized power sums T_j = sum_{i<k} (i/(k-1))^{j beta}, updated
/// incrementally; small k fall back to the direct product. O(N) total.
inline double expected_detached_fraction(const Params& p, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("expected_detached_fraction: need n >= 1");
    constexpr int kTerms = 48;
    const std::uint64_t k_direct =
        std::max<std::uint64_t>(static_cast<std::uint64_t>(4.0 * p.alpha) + 2, 16);
    double total = 0.0;
    for (std::uint64_t k = 2; k <= std::min(k_direct, n); ++k)
        total += surface_probability(p, k);
    if (n <= k_direct) return total / static_cast<double>(n);

    // T[j] for denominator k0-1 = k_direct, i.e. sums over i = 1..k_direct.
    const std::uint64_t k0 = k_direct + 1;
    double T[kTerms + 1] = {};
    for (std::uint64_t i = 1; i < k0; ++i) {
        const double u =
            std::pow(static_cast<double>(i) / static_cast<double>(k0 - 1), p.beta);
        double pw = 1.0;
        for (int j = 1; j <= kTerms; ++j) {
            pw *= u;
            T[j] += pw;
        }
    }
    for (std::uint64_t k = k0; k <= n; ++k) {
        if (k > k0) {
            // rescale denominator from k-2 to k-1 and absorb the new i = k-1
            const double rho = std::pow(static_cast<double>(k - 2) / static_cast<double>(k - 1),
                                        p.beta);
            double pw = 1.0;
            for (int j = 1; j <= kTerms; ++j) {
                pw *= rho;
                T[j] = T[j] * pw + 1.0;
            }
        }
        const double q = p.alpha / static_cast<double>(k - 1);
        double log_prod = 0.0;
        double qj = 1.0;
        for (int j = 1; j <= kTerms; ++j) {
            qj *= q;
            log_prod -= qj * T[j] / static_cast<double>(j);
        }
        total += std::exp(log_prod);
    }
    return total / static_cast<double>(n);
}

/// Fractions |C_N(U)|/N for n_samples uniform draws of U in [1, N].
inline std::vector<double> typical_component_fractions(const Dag& dag,
                                                       std::size_t n_samples,
                                                       RngHandle& rng) {
    if (n_samples < 1)
        throw std::invalid_argument("typical_component_fractions: need n_samples >= 1");
    const std::uint64_t n = dag.n_vertices();
    std::vector<double> fractions;
    fractions.reserve(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) {
        const VertexId u = rng.uniform_index(n) + 1;
        fractions.push_back(static_cast<double>(forward_component(dag, u).size()) /
                            static_cast<double>(n));
    }
    return fractions;
}

/// Adds a synthetic root below vertex 1 (serialized as index 0): vertex 1 and
/// every detached vertex gain an arc to it, making the graph rooted:
/// forward_component(augmented, 0) covers every vertex.
inline Dag augment_root(const Dag& dag) {
    if (dag.rooted) throw std::invalid_argument("augment_root: dag already augmented");
    Dag out = dag;
    out.rooted = true;
    out.arcs[1].insert(out.arcs[1].begin(), 0);
    for (VertexId v = 2; v <= out.n_vertices(); ++v)
        if (out.arcs[v].empty()) out.arcs[v].push_back(0);
    return out;
}

}  // namespace yapa
