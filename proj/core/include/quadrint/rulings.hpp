#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadrint/quadric.hpp"

namespace quadrint {

/// A projective 2-plane in P^4, stored as the reduced row echelon basis of
/// its underlying 3-dimensional subspace, so equal planes compare equal.
class PlaneP4 {
 public:
  /// Throws BadDimension unless the vectors span exactly a 3-dimensional subspace of GF(p)^5.
  static PlaneP4 from_spanning(const PrimeField& field, const std::vector<Vec>& vectors);
  /// The plane cut out by two independent linear equations (rows of length 5).
  static PlaneP4 from_equations(const PrimeField& field, const Vec& eq1, const Vec& eq2);

  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vec> spanning() const;
  bool contains(const Vec& v) const;
  bool lies_on(const QuadricForm& q) const;

  bool operator==(const PlaneP4& o) const noexcept { return basis_ == o.basis_; }
  /// Lexicographic on echelon entries.
  bool operator<(const PlaneP4& o) const noexcept;

  std::string to_string() const;

 private:
  explicit PlaneP4(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Vector-space dimension of the intersection of two planes (1, 2 or 3).
std::size_t intersection_dimension(const PlaneP4& a, const PlaneP4& b);

/// Whether two planes on a rank-4 quadric through its vertex lie in the same
/// ruling: they meet only in the vertex (or coincide). Throws NotOnQuadric
/// if either plane is off the quadric or misses the vertex, NotApplicable if rank != 4.
bool same_ruling(const QuadricForm& q, const PlaneP4& a, const PlaneP4& b);

/// The GF(p)-rational planes on a rank-4 quadric, split into its two rulings.
/// Each class is sorted; the class holding the smaller plane comes first.
struct Rulings {
  std::array<std::vector<PlaneP4>, 2> classes;
};

/// Throws NotApplicable if rank != 4 or p > 2^10, and NonSplitQuadric when the
/// quadric has no rational planes.
Rulings planes_on(const QuadricForm& q);

/// A point of the double cover W: a rank-4 quadric together with a ruling,
/// represented by one plane of that ruling.
class WPoint {
 public:
  WPoint(QuadricForm q, PlaneP4 plane);
  const QuadricForm& quadric() const noexcept { return q_; }
  const PlaneP4& plane() const noexcept { return plane_; }
  bool operator==(const WPoint& o) const;

 private:
  QuadricForm q_;
  PlaneP4 plane_;
};

/// Basis of the 9-dimensional space of quadrics containing the plane.
std::vector<QuadricForm> quadrics_through_plane(const PrimeField& field, const PlaneP4& plane);

}  // namespace quadrint
