#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadrint/field.hpp"
#include "quadrint/univariate.hpp"

namespace quadrint {

/// Homogeneous polynomial in (lambda, mu).
///
/// coeffs()[k] is the coefficient of lambda^k mu^(d-k). The zero form stores
/// no coefficients and has no degree; sums and products treat it as neutral
/// or absorbing regardless of degree.
class BinaryForm {
 public:
  explicit BinaryForm(PrimeField field) : field_(field) {}
  BinaryForm(PrimeField field, std::vector<Elem> coeffs);

  /// lambda^a mu^b with coefficient c.
  static BinaryForm monomial(PrimeField field, int lambda_exp, int mu_exp, Elem c = 1);
  /// a*lambda + b*mu
  static BinaryForm linear(PrimeField field, Elem a, Elem b);
  static BinaryForm constant(PrimeField field, Elem c);
  /// Homogenisation of f(t) = F(t, 1) to the given degree (>= deg f).
  static BinaryForm homogenize(const UniPoly& f, int degree);

  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Throws DegenerateInput for the zero form.
  int degree() const;
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  Elem coeff(int lambda_exp) const noexcept;

  Elem eval(Elem lambda, Elem mu) const noexcept;
  /// F(t, 1)
  UniPoly dehomogenize() const;
  /// Multiplicity of the root (1:0), i.e. the power of mu dividing F.
  int mu_multiplicity() const;

  BinaryForm d_lambda() const;
  BinaryForm d_mu() const;
  /// Scaled so the coefficient of the highest lambda power present is 1.
  BinaryForm monic() const;
  BinaryForm scaled(Elem s) const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  bool operator==(const BinaryForm& o) const noexcept { return c_ == o.c_; }

  /// Canonical text, e.g. "1*l^2*m + 100*m^3".
  std::string to_string() const;

 private:
  PrimeField field_;
  std::vector<Elem> c_;
};

/// A point (lambda : mu) of P^1(GF(p)) with a multiplicity.
struct ProjectiveRoot {
  Elem lambda;
  Elem mu;
  int multiplicity;
  friend bool operator==(const ProjectiveRoot&, const ProjectiveRoot&) = default;
};

enum class RootMethod { Auto, Enumerate, Splitting };

/// Exact quotient; throws DegenerateInput when g does not divide f.
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);
bool divides(const BinaryForm& g, const BinaryForm& f);

/// Monic gcd. One zero argument returns the other made monic; both zero throws DegenerateInput.
BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);
BinaryForm binary_gcd(const std::vector<BinaryForm>& forms);
/// Product of the distinct irreducible factors, monic. Its degree is the
/// number of distinct roots over the algebraic closure.
BinaryForm squarefree_part(const BinaryForm& f);
int distinct_root_count(const BinaryForm& f);
bool is_squarefree(const BinaryForm& f);
/// GF(p)-rational roots with multiplicity: affine roots (t:1) ascending, then (1:0).
/// Auto enumerates P^1 when p <= 2^20 and otherwise uses gcd with t^p - t.
std::vector<ProjectiveRoot> rational_roots(const BinaryForm& f, RootMethod method = RootMethod::Auto);
/// Degrees of all irreducible factors counted with multiplicity, descending.
std::vector<int> factor_degree_profile(const BinaryForm& f);

}  // namespace quadrint
