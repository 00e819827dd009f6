#pragma once

#include <cstdint>
#include <string>

namespace quadrint {

/// Elements of GF(p) are plain residues in [0, p).
using Elem = std::uint64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// The prime field GF(p) for an odd prime p < 2^63.
///
/// Characteristic 2 is rejected: symmetric matrices and quadratic forms are
/// identified through division by 2.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem base, std::uint64_t exp) const noexcept;
  /// Throws DegenerateInput on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const noexcept;
  /// Symmetric lift into (-p/2, p/2], used for readable printing.
  std::int64_t to_signed(Elem a) const noexcept;

  Elem half() const noexcept { return (p_ + 1) / 2; }

  /// Legendre symbol style test; 0 counts as a square.
  bool is_square(Elem a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace quadrint
