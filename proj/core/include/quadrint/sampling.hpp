#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quadrint/error.hpp"
#include "quadrint/instance.hpp"
#include "quadrint/quadric.hpp"

namespace quadrint {

class Rng;

/// Raised when a sampler runs out of attempts; carries what was found.
class SamplingBudgetExceeded : public Error {
 public:
  SamplingBudgetExceeded(const std::string& what, std::vector<Vec> partial)
      : Error(ErrorKind::SamplingBudgetExceeded, what), partial_(std::move(partial)) {}
  const std::vector<Vec>& partial() const noexcept { return partial_; }

 private:
  std::vector<Vec> partial_;
};

enum class SamplingRoute {
  Auto,              // plane enumeration for p <= 2^10, eigenvalues otherwise
  PlaneEnumeration,  // all rational points of random 2-planes in P^4
  PlaneEigenvalues,  // rational eigenvalues of multiplication maps on the plane section
};

/// Distinct points y of P^4 with rank N(y) = 4, sorted lexicographically.
/// `max_attempts` counts planes; 0 means 50 * count + 50.
std::vector<Vec> sample_S_points(const Instance& inst, std::size_t count, Rng& rng,
                                 SamplingRoute route = SamplingRoute::Auto, std::size_t max_attempts = 0);

/// Rational points of S on a 2-plane by enumeration (p <= 2^10).
std::vector<Vec> S_points_on_plane(const Instance& inst, const std::vector<Vec>& plane);

/// Rational points of S on a 2-plane from the multiplication maps of the section
/// ring in degrees 6 -> 7, any p. Points sharing a slope x1/x0 with another
/// point, and planes whose first coordinate vanishes on the section, yield nothing.
std::vector<Vec> S_points_on_plane_algebraic(const Instance& inst, const std::vector<Vec>& plane);

struct SPointPencil {
  Vec y;
  Vec x1;
  Vec x2;
  Pencil pencil;  // M(x1), M(x2); every member kills y
};

/// Throws UnexpectedRank unless ker N(y)^T is 2-dimensional.
SPointPencil pencil_at_S_point(const Instance& inst, const Vec& y);

/// det of the pencil on P^4 / y: the binary quartic whose roots are the rank-3 members.
BinaryForm reduced_quartic(const SPointPencil& sp);

struct Rank3Point {
  Vec x;
  std::optional<Vec> s_point;  // the S-point whose pencil produced x
};

struct Rank3Sampling {
  std::vector<Rank3Point> points;
  std::size_t pencils_tried = 0;
  std::size_t pencils_with_roots = 0;
  std::size_t fallback_planes = 0;
};

/// Distinct x with rank M(x) = 3 via S-point pencils; with `enumeration_fallback`
/// random 3-planes of P^5 are enumerated when pencils under-produce (p <= 2^10).
Rank3Sampling sample_rank3_points(const Instance& inst, std::size_t count, Rng& rng,
                                  SamplingRoute route = SamplingRoute::Auto, bool enumeration_fallback = false,
                                  std::size_t max_pencils = 0);

/// Rank-3 points on one random 3-plane of P^5 (p <= 2^10).
std::vector<Vec> rank3_points_on_3plane(const Instance& inst, Rng& rng);

}  // namespace quadrint
