#pragma once

#include <cstdint>

#include "quadrint/field.hpp"

namespace quadrint {

/// Seeded 64-bit xorshift generator (shifts 13, 7, 17).
///
/// The state is initialised as splitmix64(seed); a zero state is replaced by
/// 0x9E3779B97F4A7C15. Each call to next() applies
///   s ^= s << 13; s ^= s >> 7; s ^= s << 17;
/// and returns s. Field samples use rejection below the largest multiple of p,
/// so the stream is bit-exact for a given seed on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  Elem element(const PrimeField& field) noexcept { return below(field.modulus()); }
  Elem nonzero(const PrimeField& field) noexcept { return 1 + below(field.modulus() - 1); }

  /// Independent stream for trial `index`, derived from this generator's seed.
  Rng split(std::uint64_t index) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace quadrint
