#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace gsqg {

/// Philox-4x32-10 counter-based generator (Salmon et al., SC'11).
/// A draw is a pure function of (key, counter); there is no mutable stream
/// state, so ensembles and coupled runs can replay identical increments and
/// distinct (step, mode) draws can be produced concurrently.
namespace philox {

inline void round_once(std::array<std::uint32_t, 4>& ctr,
                       std::array<std::uint32_t, 2>& key) {
    constexpr std::uint64_t M0 = 0xD2511F53ull;
    constexpr std::uint64_t M1 = 0xCD9E8D57ull;
    const std::uint64_t p0 = M0 * ctr[0];
    const std::uint64_t p1 = M1 * ctr[2];
    const std::array<std::uint32_t, 4> next{
        static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
        static_cast<std::uint32_t>(p1),
        static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
        static_cast<std::uint32_t>(p0)};
    ctr = next;
    key[0] += 0x9E3779B9u;
    key[1] += 0xBB67AE85u;
}

inline std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                          std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) round_once(ctr, key);
    return ctr;
}

} // namespace philox

/// Keyed Gaussian source. Draw identity = (seed; stream, index0, index1).
/// The stream id separates independent uses (noise channels, initial data,
/// Monte Carlo probes) under one simulation seed.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Two independent uniforms in (0, 1).
    std::array<double, 2> uniform_pair(std::uint32_t stream, std::uint64_t index0,
                                       std::uint64_t index1) const {
        const auto x = philox::block(
            {static_cast<std::uint32_t>(index0),
             static_cast<std::uint32_t>(index0 >> 32),
             static_cast<std::uint32_t>(index1),
             static_cast<std::uint32_t>(index1 >> 32) ^ stream},
            {static_cast<std::uint32_t>(seed_),
             static_cast<std::uint32_t>(seed_ >> 32)});
        const std::uint64_t a = (static_cast<std::uint64_t>(x[0]) << 32) | x[1];
        const std::uint64_t b = (static_cast<std::uint64_t>(x[2]) << 32) | x[3];
        // 53-bit mantissas, offset by half an ulp to stay inside (0, 1).
        return {(static_cast<double>(a >> 11) + 0.5) * 0x1.0p-53,
                (static_cast<double>(b >> 11) + 0.5) * 0x1.0p-53};
    }

    /// Two independent standard normals (Box-Muller).
    std::array<double, 2> normal_pair(std::uint32_t stream, std::uint64_t index0,
                                      std::uint64_t index1) const {
        const auto u = uniform_pair(stream, index0, index1);
        const double r = std::sqrt(-2.0 * std::log(u[0]));
        const double phi = 2.0 * M_PI * u[1];
        return {r * std::cos(phi), r * std::sin(phi)};
    }

  private:
    std::uint64_t seed_;
};

} // namespace gsqg
