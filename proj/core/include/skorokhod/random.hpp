#pragma once

#include <cstdint>
#include <random>

namespace skorokhod {

/// One step of the splitmix64 generator; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of stream `index` under root seed `root`. Streams are derived by
/// hashing (root, index) with splitmix64, so replica i always gets the same
/// stream regardless of evaluation order.
std::uint64_t stream_seed(std::uint64_t root, std::uint64_t index);

/// Random source with platform-independent transforms. std::mt19937_64 is
/// fully specified by the standard; the distributions below are written out
/// so results do not depend on the standard library in use.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t root, std::uint64_t stream) : engine_(stream_seed(root, stream)) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Exponential with rate 1.
    double exponential();
    bool bernoulli(double p) { return uniform() < p; }
    /// +1 or -1 with equal probability.
    int sign() { return (engine_() >> 63) ? 1 : -1; }

private:
    std::mt19937_64 engine_;
};

}  // namespace skorokhod
