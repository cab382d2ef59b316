#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace causalbound {

// Deterministic random source used everywhere in the library.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the
// C++ standard, and every variate transform below is written out explicitly
// instead of going through std::*_distribution (whose algorithms are
// implementation-defined). Identical seeds therefore give identical draws
// on any conforming standard library.
//
// Draw budget per call (relevant when reasoning about streams):
//   uniform()    1 engine step
//   bernoulli()  1 engine step
//   normal()     2 engine steps (Box-Muller, no cached spare)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Derive an independent stream from (base, index); used to hand each
    // replicate / worker its own generator so evaluation order cannot
    // matter. Mixing is SplitMix64 over the pair.
    static Rng stream(std::uint64_t base, std::uint64_t index) {
        std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; u1 is shifted away from zero so log() is always finite.
    double normal(double mu, double sigma) {
        const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free modulo is fine here: n is tiny relative to 2^64 in
        // every caller (bootstrap indices, grid picks), so the bias is
        // far below anything observable.
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

}  // namespace causalbound
