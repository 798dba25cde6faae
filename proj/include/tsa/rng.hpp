/*
Deterministic seed derivation and uniform draws for reproducible simulation.
*/

#pragma once

#include <cstdint>
#include <random>

namespace tsa {

// SplitMix64 finalizer; good avalanche, used only for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combine: derive_seed(a, b) != derive_seed(b, a).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return mix64(base ^ (0x9e3779b97f4a7c15ULL + salt + (base << 6) + (base >> 2)));
}

template <typename... Salts>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt, Salts... rest) {
  return derive_seed(derive_seed(base, salt), rest...);
}

// Stream-tag constants so independent random uses never collide.
inline constexpr std::uint64_t kSeedShaping = 0x01;
inline constexpr std::uint64_t kSeedMessage = 0x02;
inline constexpr std::uint64_t kSeedChannel = 0x03;
inline constexpr std::uint64_t kSeedInterleaver = 0x04;
inline constexpr std::uint64_t kSeedProfile = 0x05;
inline constexpr std::uint64_t kSeedTrial = 0x06;
inline constexpr std::uint64_t kSeedPoint = 0x07;
inline constexpr std::uint64_t kSeedCodebook = 0x08;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1); 53-bit resolution, engine-defined and portable
  // (std::uniform_real_distribution is not guaranteed bit-identical
  // across standard libraries, so we convert raw output ourselves).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p1) { return uniform() < p1; }

  std::uint8_t bit() { return static_cast<std::uint8_t>(engine_() >> 63); }

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tsa
