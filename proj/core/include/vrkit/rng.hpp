#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace vrkit {

// splitmix64: tiny deterministic generator; one independent stream per sample index
// keeps Monte-Carlo runs reproducible regardless of thread count
struct splitmix64 {
    uint64_t state = 0;

    explicit splitmix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [a, b)
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }
};

// independent substream for sample `index` under a master seed
inline splitmix64 stream_for(uint64_t seed, uint64_t index) {
    splitmix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    mix.next();
    return mix;
}

// n positive weights summing to 1 (uniform on the simplex via exponential spacings)
inline std::vector<double> simplex_weights(splitmix64& g, int n) {
    std::vector<double> w(static_cast<size_t>(n));
    double total = 0.0;
    for (auto& wi : w) {
        wi = -std::log(1.0 - g.uniform01());
        if (wi <= 0.0) wi = 1e-300;
        total += wi;
    }
    for (auto& wi : w) wi /= total;
    return w;
}

}  // namespace vrkit
