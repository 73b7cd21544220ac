#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "yapa/dag.hpp"
#include "yapa/model.hpp"

namespace yapa {

/// Exact in/out degree histograms of a graph. Counts in each histogram sum to
/// n_vertices (including the synthetic root of augmented graphs).
struct DegreeSummary {
    std::map<std::uint64_t, std::uint64_t> in_histogram;
    std::map<std::uint64_t, std::uint64_t> out_histogram;
    std::uint64_t n_vertices = 0;
};

inline DegreeSummary degree_summary(const Dag& dag) {
    DegreeSummary s;
    const VertexId first = dag.rooted ? 0 : 1;
    std::vector<std::uint64_t> in_deg(dag.arcs.size(), 0);
    for (VertexId v = first; v < dag.arcs.size(); ++v)
        for (VertexId t : dag.arcs[v]) ++in_deg[t];
    for (VertexId v = first; v < dag.arcs.size(); ++v) {
        ++s.out_histogram[dag.arcs[v].size()];
        ++s.in_histogram[in_deg[v]];
        ++s.n_vertices;
    }
    return s;
}

/// Probability mass function on nonnegative integers with the mass beyond the
/// stored support tracked explicitly.
struct Pmf {
    std::map<std::uint64_t, double> weights;
    double residual = 0.0;

    double mass() const {
        double total = residual;
        for (const auto& [k, w] : weights) total += w;
        return total;
    }

    double mean() const {  // over the stored support
        double m = 0.0;
        for (const auto& [k, w] : weights) m += static_cast<double>(k) * w;
        return m;
    }
};

inline Pmf pmf_from_histogram(const std::map<std::uint64_t, std::uint64_t>& hist,
                              std::uint64_t total) {
    if (total == 0) throw std::invalid_argument("pmf_from_histogram: empty histogram");
    Pmf pmf;
    for (const auto& [k, c] : hist)
        pmf.weights[k] = static_cast<double>(c) / static_cast<double>(total);
    return pmf;
}

inline bool is_normalized(const Pmf& pmf, double tol = 1e-9) {
    if (pmf.residual < 0.0) return false;
    for (const auto& [k, w] : pmf.weights)
        if (w < 0.0) return false;
    return std::abs(pmf.mass() - 1.0) <= tol;
}

/// Sum_k |a(k) - b(k)| over the union support; residuals count as disjoint
/// mass. Both inputs must be normalized.
inline double l1_distance(const Pmf& a, const Pmf& b) {
    if (!is_normalized(a) || !is_normalized(b))
        throw std::invalid_argument("l1_distance: inputs must be normalized pmfs");
    double d = a.residual + b.residual;
    auto ia = a.weights.begin();
    auto ib = b.weights.begin();
    while (ia != a.weights.end() && ib != b.weights.end()) {
        if (ia->first < ib->first) d += ia++->second;
        else if (ib->first < ia->first) d += ib++->second;
        else { d += std::abs(ia->second - ib->second); ++ia; ++ib; }
    }
    for (; ia != a.weights.end(); ++ia) d += ia->second;
    for (; ib != b.weights.end(); ++ib) d += ib->second;
    return d;
}

inline double tv_distance(const Pmf& a, const Pmf& b) { return l1_distance(a, b) / 2.0; }

/// Expected in-degree of vertex m at time n: the exact sum of truncated
/// attachment probabilities over arrivals m+1..n.
inline double expected_indegree(const Params& p, VertexId m, VertexId n) {
    if (m >= n) throw std::invalid_argument("expected_indegree: need m < n");
    double total = 0.0;
    for (VertexId j = m + 1; j <= n; ++j) total += attachment_probability(p, m, j);
    return total;
}

/// Closed-form sandwich bounds on the expected in-degree. The upper bound is
/// the integral envelope (alpha/beta)(1 - (m/(n-1))^beta) plus the first
/// arrival's probability min(alpha/m, 1), which the bare envelope omits (the
/// sum over arrivals starts at the integral's lower endpoint, so the envelope
/// alone is already violated at n = m+1). The lower bound is valid for
/// ceil(alpha) <= m < n.
inline double expected_indegree_upper(const Params& p, VertexId m, VertexId n) {
    const double r = static_cast<double>(m) / static_cast<double>(n - 1);
    const double first = std::min(p.alpha / static_cast<double>(m), 1.0);
    return p.alpha / p.beta * (1.0 - std::pow(r, p.beta)) + first;
}

inline double expected_indegree_lower(const Params& p, VertexId m, VertexId n) {
    const double a = std::pow(1.0 - 1.0 / static_cast<double>(m + 1), p.beta);
    const double b = std::pow(static_cast<double>(m + 1) / static_cast<double>(n), p.beta);
    return p.alpha / p.beta * (a - b);
}

/// Expected out-degree of vertex k (exact sum; tends to alpha/(beta+1)).
inline double expected_outdegree(const Params& p, VertexId k) {
    if (k < 1) throw std::invalid_argument("expected_outdegree: need k >= 1");
    double total = 0.0;
    for (VertexId i = 1; i < k; ++i) total += attachment_probability(p, i, k);
    return total;
}

/// Uniform-in-(m,n) upper bound on P[D_in > x] for x > alpha/beta:
///   exp[-alpha/beta - x (log x + log(beta/alpha) - beta/alpha)].
inline double indegree_tail_bound(const Params& p, double x) {
    const double r = p.alpha / p.beta;
    if (!(x > r))
        throw std::invalid_argument("indegree_tail_bound: need x > alpha/beta");
    return std::exp(-r - x * (std::log(x) + std::log(p.beta / p.alpha) - 1.0 / r));
}

inline std::uint64_t max_total_degree(const Dag& dag) {
    const VertexId first = dag.rooted ? 0 : 1;
    std::vector<std::uint64_t> total(dag.arcs.size(), 0);
    for (VertexId v = first; v < dag.arcs.size(); ++v) {
        total[v] += dag.arcs[v].size();
        for (VertexId t : dag.arcs[v]) ++total[t];
    }
    std::uint64_t best = 0;
    for (VertexId v = first; v < dag.arcs.size(); ++v)
        if (total[v] > best) best = total[v];
    return best;
}

}  // namespace yapa
