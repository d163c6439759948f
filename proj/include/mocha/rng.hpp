#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace mocha::rng {

// All randomness in a run flows from one 64-bit master seed through named
// sub-streams, so each consumer (weights, minibatch, ties, task) can be
// replayed in isolation. Distributions are implemented here rather than with
// <random> distribution adaptors: the standard leaves those
// implementation-defined, and traces must be byte-identical everywhere.
class Stream {
public:
    Stream() : engine_(0) {}
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Unit-rate exponential draw; uniform01() < 1 keeps the log finite.
    double exponential() { return -std::log1p(-uniform01()); }

    // Uniform integer in [0, n); unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t fnv1a(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic sub-stream: same (master, name) pair, same stream.
inline Stream derive(std::uint64_t master, std::string_view name) {
    return Stream(splitmix64(master ^ fnv1a(name)));
}

}  // namespace mocha::rng
