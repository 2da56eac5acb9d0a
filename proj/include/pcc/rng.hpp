#pragma once

#include <cstdint>

namespace pcc {

/// Counter-based pseudo-random generator (splitmix64). The output sequence is
/// fully determined by the seed and identical across platforms, which keeps
/// every randomized code path reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        ++draw_count_;
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

    /// Bernoulli draw with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return next_below(den) < num; }

    std::uint64_t draws() const { return draw_count_; }

private:
    std::uint64_t state_;
    std::uint64_t draw_count_ = 0;
};

}  // namespace pcc
