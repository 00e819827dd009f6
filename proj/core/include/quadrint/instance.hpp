#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "quadrint/matrix.hpp"

namespace quadrint {

class Rng;

/// A net of quadrics in P^4 given by a[l][i][j], symmetric in (l, i):
/// M(x)[l][i] = sum_j a[l][i][j] x_j is the member at x in P^5 and
/// N(y)[j][l] = sum_i a[l][i][j] y_i is the 6 x 5 dual matrix.
class Instance {
 public:
  using Tensor = std::array<std::array<std::array<Elem, 6>, 5>, 5>;

  /// Throws BadParameter if the tensor is not symmetric in (l, i) or has
  /// entries outside [0, p), DegenerateInstance if det M(x) vanishes identically.
  Instance(PrimeField field, std::uint64_t seed, const Tensor& tensor, int reseeds = 0);

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t seed() const noexcept { return seed_; }
  int reseeds() const noexcept { return reseeds_; }
  const Tensor& tensor() const noexcept { return a_; }

  Matrix M(std::span<const Elem> x) const;
  Matrix N(std::span<const Elem> y) const;
  /// M as a matrix of linear forms in x0..x5 and N in y0..y4.
  PolyMatrix M_symbolic() const;
  PolyMatrix N_symbolic() const;
  /// det M(x), a quintic in six variables.
  const MultiPoly& det_M() const noexcept { return det_; }

  std::string to_json() const;
  /// {"p", "seed", "tensor"}; throws Config on malformed input, BadParameter on broken symmetry.
  static Instance from_json(const std::string& text);

 private:
  PrimeField field_;
  std::uint64_t seed_;
  int reseeds_;
  Tensor a_;
  MultiPoly det_;
};

/// Tensor from the seeded generator, symmetrized in (l, i). Re-seeds up to 10
/// times if the net is degenerate, then throws DegenerateInstance.
Instance gen_instance(std::uint64_t seed, const PrimeField& field);

/// M(x) y = N(y)^T x on random pairs.
bool duality_identity_check(const Instance& inst, Rng& rng, int trials);

}  // namespace quadrint
