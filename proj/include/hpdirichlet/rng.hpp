#pragma once

// Counter-based random bits. Every draw is a pure function of
// (seed, stream, index), so experiments reproduce bit-exactly for any
// thread count and samples can be generated out of order.

#include <cmath>
#include <cstdint>

namespace hpd::rng {

// SplitMix64 finalizer (Steele/Lea/Flood mixing constants).
constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t word) noexcept {
  return mix(seed + 0x9E3779B97F4A7C15ull * (word + 1));
}

constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t index) noexcept {
  return derive(derive(seed, stream), index);
}

// 53-bit uniform in [0, 1).
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// uniform in (0, 1]; safe under log().
constexpr double to_unit_positive(std::uint64_t bits) noexcept {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

inline double uniform01(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t index) noexcept {
  return to_unit(derive(seed, stream, index));
}

// Standard normal pair via Box-Muller from counter words (2i, 2i+1).
inline void normal_pair(std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
                        double& g0, double& g1) noexcept {
  const double u1 = to_unit_positive(derive(seed, stream, 2 * index));
  const double u2 = to_unit(derive(seed, stream, 2 * index + 1));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 6.283185307179586476925286766559 * u2;
  g0 = r * std::cos(phi);
  g1 = r * std::sin(phi);
}

// Stream ids. Keep them centralized so independent consumers never collide.
inline constexpr std::uint64_t stream_character_phase = 0x01;
inline constexpr std::uint64_t stream_mc_character = 0x02;
inline constexpr std::uint64_t stream_coefficient = 0x03;
inline constexpr std::uint64_t stream_suite = 0x04;
inline constexpr std::uint64_t stream_convexity = 0x05;
inline constexpr std::uint64_t stream_defect = 0x06;

}  // namespace hpd::rng
