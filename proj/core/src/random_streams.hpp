#ifndef GWCPG_SRC_RANDOM_STREAMS_HPP_
#define GWCPG_SRC_RANDOM_STREAMS_HPP_

#include <cstdint>
#include <random>

namespace gwcpg::detail {

// SplitMix64 finalizer, used only to decorrelate sub-seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent generator for item `index` of a run seeded with `seed`.
inline std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(seed ^ mix64(index)));
}

}  // namespace gwcpg::detail

#endif  // GWCPG_SRC_RANDOM_STREAMS_HPP_
