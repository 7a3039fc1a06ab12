#ifndef WPMEC_RNG_HPP
#define WPMEC_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace wpmec {

// Philox4x32-10 counter-based PRNG (Salmon, Moraes, Dror, Shaw; SC'11).
//
// A (seed, stream) pair addresses an independent, reproducible sequence:
// the 64-bit seed is the Philox key and the 64-bit stream id occupies the
// upper counter words, so streams never overlap. Output is platform
// independent, which keeps seeded experiments byte-identical everywhere.
class Philox {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  // One keyed 10-round block permutation; exposed for known-answer tests.
  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = kMul0 * static_cast<std::uint64_t>(ctr[0]);
      const std::uint64_t p1 = kMul1 * static_cast<std::uint64_t>(ctr[2]);
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

  std::uint64_t next_u64() {
    if (word_ >= 4) refill();
    const std::uint64_t lo = buf_[word_];
    const std::uint64_t hi = buf_[word_ + 1];
    word_ += 2;
    return lo | (hi << 32);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [0, amplitude).
  double next_uniform(double amplitude) { return amplitude * next_unit(); }

  // Standard normal pair via Box-Muller; two u64 draws per pair.
  std::array<double, 2> next_gaussian_pair() {
    // First uniform shifted into (0, 1] so the log stays finite.
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  // Circularly-symmetric complex normal, unit variance (CN(0,1)).
  std::complex<double> next_cgaussian() {
    const auto g = next_gaussian_pair();
    return {g[0] * std::numbers::sqrt2 / 2.0, g[1] * std::numbers::sqrt2 / 2.0};
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  void refill() {
    const Counter ctr = {static_cast<std::uint32_t>(block_),
                         static_cast<std::uint32_t>(block_ >> 32),
                         static_cast<std::uint32_t>(stream_),
                         static_cast<std::uint32_t>(stream_ >> 32)};
    buf_ = block(ctr, key_);
    ++block_;
    word_ = 0;
  }

  Key key_;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  Counter buf_{};
  int word_ = 4;
};

}  // namespace wpmec

#endif  // WPMEC_RNG_HPP
