#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace sumplete {

/// SplitMix64 finalizer. With a running state x advanced by
/// 0x9e3779b97f4a7c15 per call this is the SplitMix64 generator:
///   z = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
constexpr std::uint64_t splitmix64_mix(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the k-th independent sub-stream of `seed`:
///   mix(seed + (k + 1) * 0x9e3779b97f4a7c15)
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t k) noexcept {
  return splitmix64_mix(seed + (k + 1) * 0x9e3779b97f4a7c15ULL);
}

/// xoshiro256** seeded from four SplitMix64 outputs. All generated data in
/// this library is defined by these update equations, so fixtures are
/// reproducible in any language:
///
///   next():  out = rotl(s1 * 5, 7) * 9
///            t = s1 << 17
///            s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t
///            s3 = rotl(s3, 45)
///
///   below(n): threshold = (2^64 - n) mod n; draw until out >= threshold;
///             return out mod n   (unbiased)
///
///   shuffle(v): Fisher-Yates, for i = size-1 down to 1 swap v[i] with
///               v[below(i + 1)]
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      word = splitmix64_mix(x);
    }
  }

  std::uint64_t next() noexcept {
    const std::uint64_t out = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return out;
  }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  template <typename T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i-- > 1;) {
      std::swap(items[i], items[static_cast<std::size_t>(below(i + 1))]);
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace sumplete
