#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadrint/hilbert.hpp"
#include "quadrint/sampling.hpp"

namespace quadrint {

struct SecantCertificate {
  Vec x;                            // rank-3 point of P^5
  Vec u;                            // vertex line spanned by u and w
  Vec w;
  Vec line_pluecker;                // canonical Pluecker coordinates of the vertex line
  std::vector<BinaryForm> minors;   // six 5 x 5 minors of N(s u + t w)
  BinaryForm gcd;
  int gcd_degree;
  std::vector<int> factor_profile;  // degrees of the irreducible factors of the gcd
  bool proportional;                // two random pairs of minors cross-multiply
  std::optional<bool> hint_on_line; // the supplied S-point lies on the vertex line
  bool valid;
};

/// Throws NotRankThree unless rank M(x) = 3, LineInsideS if all six minors vanish.
SecantCertificate five_secant_certificate(const Instance& inst, const Vec& x, Rng& rng,
                                          const std::optional<Vec>& s_point = std::nullopt);

/// Hilbert profile of the 4 x 4 minors of M(x) in six variables.
HilbertProfile rank3_locus_profile(const Instance& inst, int dmin = 4, int dmax = 8);

struct SecantEvidence {
  Rank3Sampling sampling;
  std::vector<SecantCertificate> certificates;
  std::size_t valid_count;
  std::size_t distinct_lines;
  HilbertProfile locus;
  int dim_estimate;
};

SecantEvidence secant_family_evidence(const Instance& inst, std::size_t n_samples, Rng& rng, int dmin = 4,
                                      int dmax = 8);

struct PlaneSection {
  std::vector<Vec> plane;
  HilbertProfile profile;
};

/// Hilbert function of the six quintic minors of N restricted to a random 2-plane.
PlaneSection plane_section_profile(const Instance& inst, Rng& rng, int dmin = 5, int dmax = 12);

enum class SmoothnessStatus { Smooth, SingularCandidate, Singular };
std::string to_string(SmoothnessStatus s);

struct SmoothnessResult {
  Vec y;
  std::size_t rank_N;
  std::size_t jacobian_rank;
  SmoothnessStatus status;
};

/// Jacobian rank of the six quintic minors of N at each point. Throws NotOnS for
/// points with rank N(y) = 5, InternalInconsistency for Jacobian rank above 2 or
/// row and column ranks that disagree.
std::vector<SmoothnessResult> s_smoothness_spotcheck(const Instance& inst, const std::vector<Vec>& points);

struct DivisorCheck {
  Vec hyperplane;
  MultiPoly quartic;        // det(M(x)|_H)
  int quartic_degree;
  std::size_t samples_checked;
  std::size_t samples_vanishing;
  std::int64_t implied_deg_DH;  // quartic degree times quintic degree, halved
  std::int64_t chow_deg_DH;
  bool pass;
};

/// For p <= 2^10 it also samples rank-4 members whose vertex lies on H.
DivisorCheck dh_divisor_check(const Instance& inst, const Vec& hyperplane, Rng& rng, std::size_t samples = 10);

}  // namespace quadrint
