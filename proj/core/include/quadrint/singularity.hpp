#pragma once

#include <array>
#include <vector>

#include "quadrint/multipoly.hpp"
#include "quadrint/quadric.hpp"

namespace quadrint {

class Rng;

/// A rank-3 quadric with three symmetric directions meant to span a normal
/// slice to the rank <= 3 stratum at that point.
struct TransversalSlice {
  QuadricForm base;
  std::array<Matrix, 3> directions;
};

/// x0^2 - x1^2 - x2^2 deformed by z1 x3^2 + z2 x3 x4 + z3 x4^2.
TransversalSlice standard_a1_slice(const PrimeField& field);

/// The directions are independent modulo the tangent space of the rank-3
/// stratum, i.e. their restrictions to the vertex line are independent.
bool is_transversal(const TransversalSlice& slice);

/// Random rank-3 base with random directions, resampled until transversal.
/// Throws SliceNotTransversal after `max_attempts` failures.
TransversalSlice random_a1_slice(const PrimeField& field, Rng& rng, int max_attempts = 10);

struct A1Result {
  /// Gram matrix of the order-2 part of det(B + sum t_k D_k) in (t1, t2, t3).
  Matrix quadratic_part;
  std::size_t quadratic_rank;
  bool pass;
};

/// Expands det(B + t1 D1 + t2 D2 + t3 D3) to order 2. Throws NotApplicable
/// unless rank(B) = 3, SliceNotTransversal if the order-1 part is nonzero.
A1Result a1_transversal_check(const TransversalSlice& slice);

/// Length of C[t]/I localised at the origin, by linear algebra on the
/// truncations C[t]/(I + m^N) until consecutive values agree.
/// Throws InconclusiveRange if the origin is not isolated within `max_order`.
std::size_t local_colength(const std::vector<MultiPoly>& generators, int max_order = 32);

struct MiniversalResult {
  std::size_t colength;
  bool pass;
};

/// For x0^2 + t1 x0 x1 + t2 x1^2 + x2^2 + x3^2 + x4^2: the rank <= 4 condition
/// t1^2 - 4 t2 and the vertex-on-{x0 = 0} condition t2 meet in length 2.
MiniversalResult miniversal_length2_check(const PrimeField& field);

}  // namespace quadrint
