#include "hetsec/rng.hpp"

#include <array>

namespace hetsec::mc {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Engine make_stream(std::uint64_t seed, StreamDomain domain, std::uint64_t partition) {
    std::uint64_t state = seed;
    state ^= splitmix64(state) + static_cast<std::uint64_t>(domain);
    state ^= splitmix64(state) + partition * 0xd1b54a32d192ed03ULL;
    std::array<std::uint32_t, 8> words{};
    for (std::size_t i = 0; i < words.size(); i += 2) {
        const std::uint64_t v = splitmix64(state);
        words[i] = static_cast<std::uint32_t>(v);
        words[i + 1] = static_cast<std::uint32_t>(v >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    return Engine(seq);
}

CounterGen::CounterGen(std::uint64_t key, std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = (static_cast<std::uint64_t>(a) << 32) | b;
    state_ = key ^ splitmix64(s);
    splitmix64(state_);
}

}  // namespace hetsec::mc
