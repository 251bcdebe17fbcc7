#pragma once

#include <cstdint>
#include <random>

// Deterministic random streams for reproducible parallel replication.
//
// Every consumer gets its own stream, keyed by (master seed, run index,
// lane). The seed is derived by chaining the SplitMix64 finalizer over the
// three integers, so distinct keys give statistically independent streams
// and the mapping is stable across platforms. Lanes separate the
// environment draws from policy-internal randomness, which keeps the
// reward sequence of a run independent of which policy consumes it.

namespace osfib {

enum class StreamLane : std::uint64_t {
    environment = 0,
    policy = 1,
    instance = 2,
};

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t run,
                                    StreamLane lane) {
    std::uint64_t s = mix64(master);
    s = mix64(s ^ run);
    s = mix64(s ^ static_cast<std::uint64_t>(lane));
    return s;
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}
    RngStream(std::uint64_t master, std::uint64_t run, StreamLane lane)
        : engine_(stream_seed(master, run, lane)) {}

    // One engine draw per call; uniform on [0,1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t next() { return engine_(); }

    long binomial(long n, double p) {
        std::binomial_distribution<long> dist(n, p);
        return dist(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace osfib
