#ifndef QKIN_RNG_HPP
#define QKIN_RNG_HPP

#include <cstdint>

namespace qkin {

/// splitmix64 finalizer. Used for all seeded draws in the artifact so that
/// rates and initial states are reproducible across platforms and
/// implementations (no dependence on std::mt19937 streams).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Fold a sequence of keys into a seed, one mix round per key.
inline std::uint64_t mix_key(std::uint64_t h, std::uint64_t key) {
    return mix64(h ^ key);
}

/// Map a 64-bit hash to a double in [0, 1) using the top 53 bits.
inline double to_unit_double(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Counter-style generator: value i of the stream identified by seed.
/// Stateless, so draws are independent of evaluation order.
inline double seeded_unit(std::uint64_t seed, std::uint64_t index) {
    return to_unit_double(mix_key(mix64(seed), index));
}

}  // namespace qkin

#endif
