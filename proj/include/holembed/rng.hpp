#pragma once

#include <cstdint>

#include "holembed/rational.hpp"

namespace holembed {

/// xoshiro256** seeded through splitmix64, after Blackman and Vigna.
/// Fixed here (rather than <random>) so that seeded certificate runs replay
/// bit-identically on every platform. Bounded draws use plain reduction
/// `next() % n`; the tiny modulo bias is irrelevant for verification
/// sampling and keeps the mapping portable.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform-ish draw in [0, n). n must be positive.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr const char* name() { return "xoshiro256**"; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
};

/// Random rational with numerator in [-bound, bound] and denominator in
/// [1, bound]. bound >= 1.
inline Rational random_rational(Xoshiro256StarStar& rng, std::uint64_t bound) {
  const long num = static_cast<long>(rng.bounded(2 * bound + 1)) - static_cast<long>(bound);
  const unsigned long den = static_cast<unsigned long>(rng.bounded(bound)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline ComplexRational random_complex(Xoshiro256StarStar& rng, std::uint64_t bound) {
  Rational re = random_rational(rng, bound);
  Rational im = random_rational(rng, bound);
  return {std::move(re), std::move(im)};
}

/// Random point of the exact diamond |z|_1 <= radius: a lattice point of
/// the |.|_1 unit ball scaled by the radius, via rejection.
inline ComplexRational random_point_majorant_disc(Xoshiro256StarStar& rng,
                                                  const Rational& radius) {
  constexpr long kGrid = 1000;
  for (;;) {
    const long a = static_cast<long>(rng.bounded(2 * kGrid + 1)) - kGrid;
    const long b = static_cast<long>(rng.bounded(2 * kGrid + 1)) - kGrid;
    if (std::abs(a) + std::abs(b) > kGrid) continue;
    Rational re(a, kGrid), im(b, kGrid);
    re.canonicalize();
    im.canonicalize();
    return {Rational(re * radius), Rational(im * radius)};
  }
}

}  // namespace holembed
