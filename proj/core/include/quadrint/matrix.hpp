#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "quadrint/field.hpp"
#include "quadrint/multipoly.hpp"

namespace quadrint {

using Vec = std::vector<Elem>;

/// Dense r x c matrix over GF(p), row-major.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Entries given as (possibly negative) integers, reduced mod p.
  Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, const std::vector<Vec>& rows);
  static Matrix from_columns(PrimeField field, const std::vector<Vec>& cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem s) const;
  Vec apply(std::span<const Elem> v) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const noexcept;
  bool is_symmetric() const noexcept;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

struct RankKernel {
  std::size_t rank;
  std::vector<Vec> kernel;  // A * v = 0 for each v; |kernel| = cols - rank
};

Echelon rref(const Matrix& a);
RankKernel rank_kernel(const Matrix& a);
std::size_t rank(const Matrix& a);
Elem determinant(const Matrix& a);
/// Throws DegenerateInput for singular input.
Matrix inverse(const Matrix& a);
/// Basis extension of the given independent vectors to a basis of GF(p)^n,
/// appending standard basis vectors. Throws BadDimension if dependent.
std::vector<Vec> complete_basis(const PrimeField& field, const std::vector<Vec>& independent, std::size_t n);
/// Scale so the first nonzero coordinate is 1 (canonical projective representative).
Vec normalize_projective(const PrimeField& field, Vec v);

/// Matrix with polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix(PrimeField field, std::size_t nvars, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const PrimeField& field() const noexcept { return field_; }

  MultiPoly& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix eval(std::span<const Elem> point) const;

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> a_;
};

/// All k x k minors, ordered by row subset then column subset, both
/// lexicographic. Throws BadDimension unless 1 <= k <= min(rows, cols).
std::vector<MultiPoly> minors(const PolyMatrix& a, std::size_t k);
MultiPoly determinant(const PolyMatrix& a);

}  // namespace quadrint
