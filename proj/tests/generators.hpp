#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>

namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Magnitude log-uniform in [1e-3, 1e3].
    double magnitude() { return log_uniform(1e-3, 1e3); }

    /// t strictly inside (1/2, 1).
    double weight() {
        double t = uniform(0.5, 1.0);
        while (t <= 0.5 || t >= 1.0) t = uniform(0.5, 1.0);
        return t;
    }

    double exponent() { return log_uniform(0.5, 10.0); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double rel_diff(double x, double y) {
    return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

}  // namespace gen
