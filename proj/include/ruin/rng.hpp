#pragma once

#include <cmath>
#include <cstdint>

namespace ruin {

/// Counter-based random stream (Philox 4x32-10).
///
/// One 64-bit root seed keys the generator; the 64-bit stream id selects a
/// statistically independent substream. Because the state is just
/// (key, stream, counter), a fresh stream costs nothing to set up, so Monte
/// Carlo drivers give every sample its own stream. That makes estimates
/// independent of the worker split and lets common-random-number comparisons
/// reuse sample i's draws across scenario parameters.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_(stream) {}

    std::uint64_t next_u64() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        std::uint32_t c0 = static_cast<std::uint32_t>(block_);
        std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
        std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
        ++block_;

        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * c0;
            const std::uint64_t p1 = 0xCD9E8D57ull * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        spare_ = (static_cast<std::uint64_t>(c2) << 32) | c3;
        have_spare_ = true;
        return (static_cast<std::uint64_t>(c0) << 32) | c1;
    }

    /// Uniform draw in [0, 1) with 53 random bits.
    double next_uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential draw with the given rate (inverse CDF).
    double next_exponential(double rate) noexcept {
        return -std::log(1.0 - next_uniform()) / rate;
    }

private:
    std::uint32_t key0_;
    std::uint32_t key1_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

}  // namespace ruin
