#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace yapa {

/// splitmix64 finalizer; used for seed mixing and child-stream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic 64-bit-seeded random stream. One handle per logical
/// simulation stream; never shared between threads. Identical seed and
/// identical call sequence yield identical variates. Variates are mapped
/// from raw 64-bit words here rather than through std::*_distribution,
/// whose output is implementation-defined.
class RngHandle {
public:
    explicit RngHandle(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// Independent stream for replicate `run_index` (seed XOR hashed index).
    RngHandle child(std::uint64_t run_index) const {
        return RngHandle(seed_ ^ splitmix64(run_index));
    }

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return engine_; }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Number of failures before the first success of a Bernoulli(q) sequence,
    /// q in (0, 1). Inversion of the geometric CDF.
    std::uint64_t geometric_skip(double q) {
        const double u = 1.0 - uniform01();  // (0, 1]
        const double g = std::log(u) / std::log1p(-q);
        if (g >= 9.2e18) return UINT64_MAX;  // caller treats as "past the end"
        return static_cast<std::uint64_t>(g);
    }

    /// Uniform index in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    /// Poisson variate by inversion (Knuth), chunked so that exp(-lambda)
    /// never underflows. Exact for any lambda >= 0.
    std::uint64_t poisson(double lambda) {
        std::uint64_t total = 0;
        while (lambda > 30.0) {
            total += poisson_knuth(30.0);
            lambda -= 30.0;
        }
        return total + poisson_knuth(lambda);
    }

private:
    std::uint64_t poisson_knuth(double lambda) {
        if (lambda <= 0.0) return 0;
        const double limit = std::exp(-lambda);
        std::uint64_t k = 0;
        double prod = uniform01();
        while (prod > limit) {
            ++k;
            prod *= uniform01();
        }
        return k;
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace yapa
