#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yapa/degree_stats.hpp"
#include "yapa/model.hpp"
#include "yapa/quadrature.hpp"
#include "yapa/rng.hpp"

namespace yapa {

enum class Regime { subcritical, critical, supercritical };

inline Regime classify_regime(const Params& p) {
    if (p.alpha > p.beta + 1.0) return Regime::supercritical;
    if (p.alpha == p.beta + 1.0) return Regime::critical;
    return Regime::subcritical;
}

/// Solved limiting component fraction gamma and weight fixed point y*.
/// Outside the supercritical regime both are exactly 0.
struct FixpointResult {
    double gamma = 0.0;
    double y_star = 0.0;
    Regime regime = Regime::subcritical;
    int iterations = 0;
    double residual = 0.0;
};

namespace detail {

/// Bisection to ~1e-14 bracket width followed by Newton polish. `f` must
/// change sign on [lo, hi].
template <typename F, typename DF>
std::pair<double, int> bisect_newton(F f, DF df, double lo, double hi) {
    double flo = f(lo);
    int iters = 0;
    for (; iters < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++iters) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((fmid < 0.0) == (flo < 0.0)) { lo = mid; flo = fmid; }
        else hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i, ++iters) {
        const double fx = f(x);
        const double dfx = df(x);
        if (dfx == 0.0) break;
        const double step = fx / dfx;
        const double next = x - step;
        if (!(next > 0.0) || std::abs(step) < 1e-17) break;
        x = next;
    }
    return {x, iters};
}

}  // namespace detail

/// Unique positive solution of 1 - e^{-y} = ((1+beta)/alpha) y, or 0 when
/// alpha <= beta + 1. The positive root lies strictly below alpha/(beta+1).
inline double solve_y_star(const Params& p, int* iterations = nullptr,
                           double* residual = nullptr) {
    if (classify_regime(p) != Regime::supercritical) {
        if (iterations) *iterations = 0;
        if (residual) *residual = 0.0;
        return 0.0;
    }
    const double r = (1.0 + p.beta) / p.alpha;  // < 1
    auto f = [r](double y) { return 1.0 - std::exp(-y) - r * y; };
    auto df = [r](double y) { return std::exp(-y) - r; };
    auto [y, iters] = detail::bisect_newton(f, df, 1e-15, 1.0 / r);
    if (iterations) *iterations = iters;
    if (residual) *residual = std::abs(f(y));
    return y;
}

/// Positive solution of x = 1 - e^{-(alpha/(beta+1)) x} (bisection on
/// [1e-15, 1], Newton polish), 0 when alpha <= beta + 1.
inline FixpointResult solve_gamma(const Params& p) {
    FixpointResult res;
    res.regime = classify_regime(p);
    if (res.regime != Regime::supercritical) return res;
    const double c = p.alpha / (p.beta + 1.0);  // > 1
    auto f = [c](double x) { return x - (1.0 - std::exp(-c * x)); };
    auto df = [c](double x) { return 1.0 - c * std::exp(-c * x); };
    auto [x, iters] = detail::bisect_newton(f, df, 1e-15, 1.0);
    int y_iters = 0;
    double y_res = 0.0;
    res.gamma = x;
    res.y_star = solve_y_star(p, &y_iters, &y_res);
    res.iterations = iters + y_iters;
    res.residual = std::max(std::abs(f(x)), y_res);
    return res;
}

/// Limiting out-degree law: Poisson(alpha/(beta+1)). Weights are emitted up
/// to k_max, stopping early once the residual tail mass drops below 1e-12.
inline Pmf limiting_outdegree_pmf(const Params& p, std::uint64_t k_max) {
    const double lambda = p.alpha / (p.beta + 1.0);
    Pmf pmf;
    double cum = 0.0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const double w = std::exp(static_cast<double>(k) * std::log(lambda) - lambda -
                                  std::lgamma(static_cast<double>(k) + 1.0));
        pmf.weights[k] = w;
        cum += w;
        if (1.0 - cum < 1e-12) break;
    }
    pmf.residual = std::max(0.0, 1.0 - cum);
    return pmf;
}

/// Limiting in-degree law: mixed Poisson with rate (alpha/beta)(1 - s^beta),
/// s uniform on [0,1]. Each weight is an adaptive quadrature over the mixing
/// variable to absolute tolerance `tol`.
inline Pmf limiting_indegree_pmf(const Params& p, std::uint64_t k_max,
                                 double tol = 1e-10) {
    const double rate = p.alpha / p.beta;
    Pmf pmf;
    double cum = 0.0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const double lg = std::lgamma(static_cast<double>(k) + 1.0);
        auto integrand = [&](double s) {
            const double lambda = rate * (1.0 - std::pow(s, p.beta));
            if (lambda <= 0.0) return k == 0 ? 1.0 : 0.0;
            return std::exp(static_cast<double>(k) * std::log(lambda) - lambda - lg);
        };
        const double w = adaptive_simpson(integrand, 0.0, 1.0, tol);
        pmf.weights[k] = w;
        cum += w;
        if (1.0 - cum < 1e-12) break;
    }
    pmf.residual = std::max(0.0, 1.0 - cum);
    return pmf;
}

/// One-dimensional comparison chain started at Y_m = y0:
///   dY_n = -((b+1)/(n+1)) Y_n + (a/(n+1)) 1{up},  P(up) = 1 - e^{-Y_n}.
struct YChainConfig {
    double a;
    double b;
    double y0;
    std::uint64_t start_index;

    YChainConfig(double a_, double b_, double y0_, std::uint64_t m)
        : a(a_), b(b_), y0(y0_), start_index(m) {
        if (!(a > 0.0 && b > 0.0 && y0 > 0.0))
            throw std::invalid_argument("YChainConfig: a, b, y0 must be > 0");
    }
};

/// Exact simulation of the chain for n_steps transitions. Returns (index, Y)
/// samples every `stride` steps; the initial and terminal states are always
/// included.
inline std::vector<std::pair<std::uint64_t, double>> simulate_y_chain(
    const YChainConfig& cfg, std::uint64_t n_steps, RngHandle& rng,
    std::uint64_t stride = 1) {
    if (n_steps < 1) throw std::invalid_argument("simulate_y_chain: need n_steps >= 1");
    if (stride < 1) stride = 1;
    std::vector<std::pair<std::uint64_t, double>> trace;
    trace.reserve(n_steps / stride + 2);
    double y = cfg.y0;
    std::uint64_t n = cfg.start_index;
    trace.emplace_back(n, y);
    for (std::uint64_t step = 1; step <= n_steps; ++step) {
        const bool up = rng.uniform01() < 1.0 - std::exp(-y);
        const double dn = static_cast<double>(n + 1);
        y += -(cfg.b + 1.0) / dn * y + (up ? cfg.a / dn : 0.0);
        ++n;
        if (step % stride == 0 || step == n_steps) trace.emplace_back(n, y);
    }
    return trace;
}

/// Node of the limiting multitype branching tree. Offspring counts are
/// Poisson(alpha (1 - v^beta)/beta) and child types are uniform on [v, 1].
struct GwNode {
    double type_v;
    std::uint32_t generation;
    std::vector<GwNode> children;
};

struct GwSummary {
    GwNode root;
    std::vector<std::uint64_t> generation_sizes;
    bool extinct = false;    // died out before the generation cap
    bool truncated = false;  // stopped by the node cap, sizes incomplete
    std::uint64_t total_nodes = 0;
};

/// Simulates the branching tree down to `max_generations`, stopping early if
/// a generation is empty (extinct) or `max_nodes` is reached (truncated).
/// `root_type` forces the root's type; by default it is drawn uniformly.
inline GwSummary simulate_gw_tree(const Params& p, std::uint32_t max_generations,
                                  std::uint64_t max_nodes, RngHandle& rng,
                                  std::optional<double> root_type = {}) {
    if (max_nodes < 1) throw std::invalid_argument("simulate_gw_tree: need max_nodes >= 1");
    GwSummary s;
    s.root = GwNode{root_type ? *root_type : rng.uniform01(), 0, {}};
    s.generation_sizes.push_back(1);
    s.total_nodes = 1;
    std::vector<GwNode*> current{&s.root};
    for (std::uint32_t g = 1; g <= max_generations && !current.empty(); ++g) {
        std::vector<GwNode*> next;
        for (GwNode* node : current) {
            const double v = node->type_v;
            const double lambda = p.alpha * (1.0 - std::pow(v, p.beta)) / p.beta;
            std::uint64_t count = rng.poisson(lambda);
            if (s.total_nodes + count > max_nodes) {
                count = max_nodes - s.total_nodes;
                s.truncated = true;
            }
            node->children.reserve(count);
            for (std::uint64_t c = 0; c < count; ++c)
                node->children.push_back(GwNode{v + (1.0 - v) * rng.uniform01(), g, {}});
            s.total_nodes += count;
            for (auto& child : node->children) next.push_back(&child);
            if (s.truncated) break;
        }
        if (next.empty() && !s.truncated) {
            s.extinct = true;
            break;
        }
        s.generation_sizes.push_back(next.size());
        current = std::move(next);
        if (s.truncated) break;
    }
    return s;
}

}  // namespace yapa
