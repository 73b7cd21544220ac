#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace yapa {

/// 1-based arrival index; vertex 1 is the genesis vertex.
using VertexId = std::uint64_t;

/// Model parameters of the young-age preferential attachment rule.
/// alpha controls the expected number of arcs a new vertex creates,
/// beta controls how quickly old vertices lose attractiveness.
struct Params {
    double alpha;
    double beta;

    Params(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(std::isfinite(alpha) && alpha > 0.0))
            throw std::invalid_argument("Params: alpha must be finite and > 0");
        if (!(std::isfinite(beta) && beta > 0.0))
            throw std::invalid_argument("Params: beta must be finite and > 0");
    }
};

/// Probability that arriving vertex n sends an arc to m < n:
///   min( alpha/(n-1) * (m/(n-1))^beta , 1 ).
/// Truncation is applied after the full evaluation.
inline double attachment_probability(const Params& p, VertexId m, VertexId n) {
    if (m < 1 || m >= n)
        throw std::invalid_argument("attachment_probability: need 1 <= m < n");
    const double d = static_cast<double>(n - 1);
    const double raw = p.alpha / d * std::pow(static_cast<double>(m) / d, p.beta);
    return raw < 1.0 ? raw : 1.0;
}

/// Weight of vertex m against a horizon index: alpha * (m/horizon)^beta.
/// Bounded by alpha for every valid pair.
inline double vertex_weight(const Params& p, VertexId m, VertexId horizon) {
    if (m < 1 || m > horizon)
        throw std::invalid_argument("vertex_weight: need 1 <= m <= horizon");
    return p.alpha * std::pow(static_cast<double>(m) / static_cast<double>(horizon), p.beta);
}

/// Connection kernel on relative ages: alpha * x^beta * y^-(beta+1) for x < y,
/// zero on the closed lower diagonal.
inline double kernel(const Params& p, double x, double y) {
    if (!(x > 0.0 && x <= 1.0 && y > 0.0 && y <= 1.0))
        throw std::invalid_argument("kernel: arguments must lie in (0, 1]");
    if (x >= y) return 0.0;
    return p.alpha * std::pow(x, p.beta) * std::pow(y, -(p.beta + 1.0));
}

/// Finite-size correction linking the kernel form to the attachment rule:
/// (1 + 1/(n-1))^(beta+1) - 1. Strictly decreasing in n, O(1/n).
inline double finite_size_correction(const Params& p, VertexId n) {
    if (n < 2) throw std::invalid_argument("finite_size_correction: need n >= 2");
    return std::pow(1.0 + 1.0 / static_cast<double>(n - 1), p.beta + 1.0) - 1.0;
}

/// Length of the deterministic prefix: the arcs (n -> n-1) are forced as long
/// as alpha/(n-1) >= 1, i.e. for all n <= floor(alpha) + 1, so the first
/// floor(alpha)+1 vertices are sequentially connected by construction.
inline VertexId deterministic_prefix(const Params& p) {
    return static_cast<VertexId>(std::floor(p.alpha)) + 1;
}

}  // namespace yapa
