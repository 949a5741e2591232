#pragma once

#include <cmath>
#include <cstdint>

namespace holo {

// Deterministic random stream (splitmix64 core). All sampling is done by
// hand because std::* distributions are implementation-defined and we
// promise bit-identical outputs for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent substream for item `index` (frame, path point, ...).
    // Draw order inside one substream never depends on other substreams,
    // so parallel generation is schedule-independent.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng h(seed ^ (0x9E3779B97F4A7C15ULL * (index + 0x632BE59BD9B4E019ULL)));
        h.next_u64();
        h.next_u64();
        return h;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Marsaglia's polar method.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // Poisson count by accumulating unit-rate exponential arrivals.
    // Exact for any mean; O(mean) time, which is fine at the rates we use.
    long poisson(double mean) {
        if (!(mean > 0.0)) return 0;
        long k = -1;
        double t = 0.0;
        while (t < mean) {
            t += -std::log1p(-uniform());
            ++k;
        }
        return k;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace holo
