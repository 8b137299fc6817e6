#include "skorokhod/random.hpp"

#include <cmath>

namespace skorokhod {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root;
    const std::uint64_t a = splitmix64(s);
    std::uint64_t t = a ^ (index * 0xd1b54a32d192ed03ULL);
    splitmix64(t);
    return splitmix64(t);
}

double Rng::exponential() {
    // 1 - U lies in (0,1], so the log is finite.
    return -std::log1p(-uniform());
}

}  // namespace skorokhod
