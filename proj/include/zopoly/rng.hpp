#pragma once

#include <array>
#include <cstdint>

namespace zopoly {

/// Philox4x32-10 counter-based generator (Salmon et al.).  A (seed, stream)
/// pair keys an independent stream; blocks are pure functions of the
/// counter, so parallel workers draw disjoint, reproducible streams.
class Philox {
  public:
    Philox(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_(stream) {}

    std::uint64_t next_u64() {
        if (sub_ >= 4)
            refill();
        std::uint64_t lo = buf_[sub_++];
        std::uint64_t hi = (sub_ < 4) ? buf_[sub_++] : (refill(), buf_[sub_++]);
        return lo | (hi << 32);
    }

    /// Unbiased value in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            return 0;
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit)
                return v % bound;
        }
    }

    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  private:
    static constexpr std::uint32_t kM0 = 0xD2511F53;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57;
    static constexpr std::uint32_t kW0 = 0x9E3779B9;
    static constexpr std::uint32_t kW1 = 0xBB67AE85;

    std::uint32_t key0_, key1_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int sub_ = 4;

    static void round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
        std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
    }

    void refill() {
        std::array<std::uint32_t, 4> c = {
            static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int r = 0; r < 10; ++r) {
            round(c, k0, k1);
            k0 += kW0;
            k1 += kW1;
        }
        buf_ = c;
        ++counter_;
        sub_ = 0;
    }
};

} // namespace zopoly
