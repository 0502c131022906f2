#pragma once

#include <cstdint>
#include <random>

namespace stablekit {

// splitmix64 step (Steele/Lea/Flood mixing constants). Used to decorrelate
// nearby seeds and to derive per-task seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Per-task seed fan-out: task_seed(master, i) is the documented scheme the
// pipeline uses so that thread scheduling can never affect which stream a
// work item consumes.
inline std::uint64_t task_seed(std::uint64_t master, std::uint64_t task_index) {
    std::uint64_t s = master ^ (0x9E3779B97F4A7C15ull * (task_index + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    // One mixing step so that seeds 0,1,2,... do not start in similar states.
    std::uint64_t s = seed;
    return std::mt19937_64(splitmix64(s));
}

// Uniform double in [0, 1) with 53 random bits. The standard distribution
// objects are implementation-defined; this mapping is portable and keeps
// fixed-seed output stable across platforms.
inline double u01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace stablekit
