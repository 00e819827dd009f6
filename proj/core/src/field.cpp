#include "quadrint/field.hpp"

#include "quadrint/error.hpp"

namespace quadrint {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2) throw Error(ErrorKind::Config, "characteristic 2 is not supported");
  if (p >= (1ULL << 63U) || !is_prime(p)) {
    throw Error(ErrorKind::Config, "modulus " + std::to_string(p) + " is not an odd prime below 2^63");
  }
}

Elem PrimeField::pow(Elem base, std::uint64_t exp) const noexcept { return powmod(base, exp, p_); }

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(ErrorKind::DegenerateInput, "inverse of zero");
  return powmod(a, p_ - 2, p_);
}

Elem PrimeField::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<Elem>(v) % p_;
  // -(v+1) avoids overflow at INT64_MIN.
  Elem m = static_cast<Elem>(-(v + 1)) % p_;
  return sub(p_ - 1, m);
}

std::int64_t PrimeField::to_signed(Elem a) const noexcept {
  if (a > p_ / 2) return -static_cast<std::int64_t>(p_ - a);
  return static_cast<std::int64_t>(a);
}

bool PrimeField::is_square(Elem a) const noexcept {
  if (a == 0) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

}  // namespace quadrint
