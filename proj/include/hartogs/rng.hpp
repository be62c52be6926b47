#pragma once

#include <cstdint>

namespace hartogs {

/// splitmix64 output mix; used both to derive stream seeds and to expand a
/// single seed into generator state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256++ with a fixed, platform-independent mapping to doubles.
/// Per-shard streams come from shard_stream(): the user seed is XORed with a
/// multiplicatively spread shard index, then run through the splitmix64 mix
/// to fill the state. Results are therefore reproducible for any fixed
/// (seed, shard_count), independent of thread scheduling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    static Rng shard_stream(std::uint64_t seed, std::uint64_t shard_index) {
        return Rng(seed ^ (0xD1B54A32D192ED03ull * (shard_index + 1)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform_positive() { return 1.0 - uniform(); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace hartogs
