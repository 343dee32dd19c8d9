#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mmqrl {

// Deterministic random stream. Distributions are hand-rolled on top of
// mt19937_64 so results do not depend on the standard library's
// implementation-defined distribution algorithms.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // Derive an independent stream, e.g. per worker or per episode.
    Rng fork(uint64_t salt) {
        return Rng(gen_() ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    }

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    // Standard normal via Box-Muller; second value cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace mmqrl
