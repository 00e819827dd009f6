#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quadrint/binary_form.hpp"
#include "quadrint/matrix.hpp"

namespace quadrint {

/// A quadratic form q(x) = x^T B x given by its symmetric Gram matrix B.
/// Points of the P^14 of quadrics in P^4 are the 5 x 5 case.
class QuadricForm {
 public:
  explicit QuadricForm(Matrix symmetric, std::string label = {});

  /// Form coefficients c_ij (i <= j) of x_i x_j in row-major upper-triangle order.
  /// For n = 5 that is 15 integers; off-diagonal Gram entries are c_ij / 2.
  static QuadricForm from_coefficients(const PrimeField& field, std::size_t n, std::span<const std::int64_t> coeffs,
                                       std::string label = {});
  struct Term {
    std::size_t i;
    std::size_t j;
    std::int64_t c;
  };
  /// Sum of c * x_i * x_j over the given terms.
  static QuadricForm from_terms(const PrimeField& field, std::size_t n, std::initializer_list<Term> terms,
                                std::string label = {});

  const Matrix& matrix() const noexcept { return m_; }
  const PrimeField& field() const noexcept { return m_.field(); }
  std::size_t dim() const noexcept { return m_.rows(); }
  const std::string& label() const noexcept { return label_; }

  /// Upper-triangle form coefficients as residues in [0, p).
  std::vector<Elem> coefficients() const;

  Elem value(std::span<const Elem> x) const;
  /// Polar form B(x, y) = x^T B y, so that q(x + y) = q(x) + 2 B(x, y) + q(y).
  Elem polar(std::span<const Elem> x, std::span<const Elem> y) const;

  std::size_t rank() const { return quadrint::rank(m_); }
  /// Basis of the kernel; its projectivisation is the vertex.
  std::vector<Vec> vertex() const { return rank_kernel(m_).kernel; }

  /// g^T B g: the same quadric in coordinates x = g x'.
  QuadricForm congruent(const Matrix& g) const;
  QuadricForm operator+(const QuadricForm& o) const;
  QuadricForm scaled(Elem s) const;
  /// Same point of projective space (proportional nonzero matrices).
  bool proportional(const QuadricForm& o) const;

  bool operator==(const QuadricForm& o) const noexcept { return m_ == o.m_; }

 private:
  Matrix m_;
  std::string label_;
};

/// Gram matrix of the restriction of q to span(vectors): S^T B S.
/// Throws BadDimension when the spanning vectors are dependent.
Matrix restrict(const QuadricForm& q, const std::vector<Vec>& spanning);
/// Restriction to a 2-dimensional subspace as a binary quadratic form in (s, t).
BinaryForm restrict_to_line(const QuadricForm& q, const Vec& u, const Vec& w);

/// The line <A1, A2> in the space of quadrics, members lambda*A1 + mu*A2.
class Pencil {
 public:
  /// Throws DegenerateInput unless the two forms are independent and of equal size.
  Pencil(QuadricForm a1, QuadricForm a2);

  const QuadricForm& first() const noexcept { return a1_; }
  const QuadricForm& second() const noexcept { return a2_; }
  const PrimeField& field() const noexcept { return a1_.field(); }

  QuadricForm member(Elem lambda, Elem mu) const;
  /// lambda*B1 + mu*B2 as a matrix of linear forms in (lambda, mu).
  PolyMatrix symbolic() const;
  /// det(lambda*A1 + mu*A2), a binary form of degree <= n or zero.
  BinaryForm det_form() const;
  /// All (n-1) x (n-1) minors as binary forms.
  std::vector<BinaryForm> submaximal_minors() const;

  /// Coordinate change x = g x' applied to both generators.
  Pencil congruent(const Matrix& g) const;
  /// New basis (c00 A1 + c10 A2, c01 A1 + c11 A2); `c` must be invertible 2 x 2.
  Pencil rebased(const Matrix& c) const;

 private:
  QuadricForm a1_;
  QuadricForm a2_;
};

/// Every member is singular: det(lambda*A1 + mu*A2) vanishes identically.
bool pencil_in_Z(const Pencil& pencil);

struct Rank3Locus {
  BinaryForm gcd_form;
  int distinct_count;
  std::vector<ProjectiveRoot> rational_points;
};

/// Members of rank <= n-2: the gcd of all submaximal minors.
/// Throws NotInZ off Z and DegeneratePencil when every minor vanishes.
Rank3Locus rank3_locus(const Pencil& pencil);

/// Homogeneous bivariate polynomial converted to a binary form.
BinaryForm to_binary_form(const MultiPoly& f);

}  // namespace quadrint
