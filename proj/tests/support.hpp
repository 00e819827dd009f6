#pragma once

#include <vector>

#include "quadrint/matrix.hpp"
#include "quadrint/quadric.hpp"
#include "quadrint/rng.hpp"

namespace quadrint::testing {

inline Matrix random_matrix(const PrimeField& f, Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.element(f);
  return m;
}

inline Matrix random_invertible(const PrimeField& f, Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(f, rng, n, n);
    if (determinant(m) != 0) return m;
  }
}

inline QuadricForm random_quadric(const PrimeField& f, Rng& rng, std::size_t n = 5) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.element(f);
  return QuadricForm(m);
}

inline Vec random_vector(const PrimeField& f, Rng& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rng.element(f);
  return v;
}

inline bool is_zero_vector(const Vec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace quadrint::testing
