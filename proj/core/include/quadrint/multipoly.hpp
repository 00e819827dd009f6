#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quadrint/field.hpp"

namespace quadrint {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exps{};

  int degree() const noexcept;
  Monomial operator*(const Monomial& o) const noexcept;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then x0 > x1 > ...
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// All monomials of degree d in n variables, descending in grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// Sparse multivariate polynomial over GF(p); zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Elem, GrlexLess>;

  MultiPoly(PrimeField field, std::size_t nvars);

  static MultiPoly constant(PrimeField field, std::size_t nvars, Elem c);
  static MultiPoly variable(PrimeField field, std::size_t nvars, std::size_t i);
  /// sum_i coeffs[i] * x_i
  static MultiPoly linear(PrimeField field, std::span<const Elem> coeffs);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for zero.
  int total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  MultiPoly homogeneous_part(int d) const;
  Elem coefficient(const Monomial& m) const noexcept;

  void add_term(const Monomial& m, Elem c);

  Elem eval(std::span<const Elem> point) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly scaled(Elem s) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const noexcept { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Canonical text `c*x0^a0*x1^a1...`, terms in descending grlex order,
  /// coefficients as residues in [0, p).
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  PrimeField field_;
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace quadrint
