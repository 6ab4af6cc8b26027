#pragma once

// Portable pseudo-random streams for the synthetic corpus generator.
//
// Generator: xoshiro256** (Blackman & Vigna), state filled from four
// successive SplitMix64 outputs of the seed. Samplers are written against
// this generator only; no <random> distribution is used, since those differ
// between standard libraries.

#include <array>
#include <cstdint>

namespace citemetric::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function applied to one state value.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256ss {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256ss(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  // [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // (0, 1), safe to take the logarithm of.
  double uniform_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_{};
};

// Seed for the index-th independent sub-stream of `seed`:
// mix64(seed ^ mix64(index + kGolden)).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + kGolden));
}

// Marsaglia polar method; the second variate of each pair is discarded so
// the stream position depends only on the number of calls.
double normal(Xoshiro256ss& g) noexcept;
double lognormal(Xoshiro256ss& g, double mu, double sigma) noexcept;
// Marsaglia-Tsang; shapes below 1 use the U^(1/a) boost.
double gamma(Xoshiro256ss& g, double shape) noexcept;
double beta(Xoshiro256ss& g, double a, double b) noexcept;

// Exact inversion of the Binomial(n, p) CDF using only + - * / on the pmf
// ratio recurrence, centred on the mode. Terms below 1e-17 of the modal
// probability are dropped.
std::uint64_t binomial(Xoshiro256ss& g, std::uint64_t n, double p) noexcept;

}  // namespace citemetric::rng
