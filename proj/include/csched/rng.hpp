#pragma once

#include <cmath>
#include <cstdint>

namespace csched {

// splitmix64 finalizer; also used to derive independent sub-seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic generator with a fixed draw contract: every distribution
// below consumes a documented number of next_u64() calls, so sequences can
// be replayed in tests and results do not depend on the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // splitmix64 stream; one draw.
    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits; one draw.
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n); unbiased via 128-bit multiply with rejection.
    // One draw in the common case.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t range = static_cast<std::uint64_t>(n);
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * range;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * range;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::size_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform_double() < p; }

    // Exponential with the given rate; one draw.
    double exponential(double rate) {
        return -std::log(1.0 - uniform_double()) / rate;
    }

    // Box-Muller without caching; exactly two draws per call.
    double normal(double mean, double sigma) {
        const double u1 = 1.0 - uniform_double();  // (0, 1]
        const double u2 = uniform_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // exp of a normal draw; two draws per call.
    double lognormal(double mu, double sigma) { return std::exp(normal(mu, sigma)); }

private:
    std::uint64_t state_;
};

}  // namespace csched
