#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quadrint/field.hpp"

namespace quadrint {

class Rng;

/// Dense univariate polynomial over GF(p), coefficients low to high.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class UniPoly {
 public:
  explicit UniPoly(PrimeField field) : field_(field) {}
  UniPoly(PrimeField field, std::vector<Elem> coeffs);

  static UniPoly constant(PrimeField field, Elem c);
  /// The monomial t^k.
  static UniPoly monomial(PrimeField field, std::size_t k, Elem c = 1);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }

  Elem eval(Elem t) const noexcept;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(Elem s) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const noexcept { return c_ == o.c_; }

 private:
  void trim() noexcept;

  PrimeField field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws DegenerateInput for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// base^exp mod m.
UniPoly powmod(const UniPoly& base, std::uint64_t exp, const UniPoly& m);
/// Product of the distinct monic irreducible factors (valid in every characteristic).
UniPoly radical(const UniPoly& f);
/// Distinct roots in GF(p) of a nonzero polynomial, ascending, via
/// gcd with t^p - t and equal-degree splitting.
std::vector<Elem> roots_by_splitting(const UniPoly& f, Rng& rng);
/// Degrees of the irreducible factors of a squarefree polynomial (distinct-degree factorisation).
std::vector<int> distinct_degree_profile(const UniPoly& squarefree);

}  // namespace quadrint
