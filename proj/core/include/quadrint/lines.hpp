#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadrint/quadric.hpp"
#include "quadrint/rulings.hpp"

namespace quadrint {

class Rng;

/// The three kinds of lines in the quintic Z of singular quadrics.
enum class LineFamily { CommonPlane, CommonVertex, Rank2Special, NonGeneric };

std::string to_string(LineFamily f);

/// Restriction of a complementary member to the vertex line of a rank-3 member.
struct TangencyWitness {
  ProjectiveRoot point;     // (lambda : mu) of the rank-3 member
  Vec u;                    // vertex line basis: the form is q(lambda*u + mu*w)
  Vec w;
  BinaryForm restriction;   // a nonzero square when the vertex line is tangent
};

struct LineClassification {
  LineFamily family = LineFamily::NonGeneric;
  Rank3Locus locus;
  std::optional<Vec> common_vertex;
  std::optional<PlaneP4> common_plane;
  std::vector<TangencyWitness> tangency;
  std::string reason;  // why NonGeneric, empty otherwise
};

/// Tags a pencil contained in Z. Checks run in the order CommonVertex,
/// CommonPlane, Rank2Special; a pencil matching none, or with a non-reduced
/// rank-3 locus, is tagged NonGeneric. Throws NotInZ off Z.
LineClassification classify_line(const Pencil& pencil);

/// Common plane through the span of member vertices, usable at any p.
std::optional<PlaneP4> common_plane_from_vertices(const Pencil& pencil);

enum class PreimageVerdict { SplitTwoLines, Irreducible };

struct PreimageResult {
  int ramification;
  PreimageVerdict verdict;
  int genus;  // -1 when the preimage splits
};

/// Preimage of the line in the double cover W, from the rank-3 points.
/// Throws NonGeneric for a non-reduced locus, InternalInconsistency for odd ramification.
PreimageResult preimage_analysis(const Pencil& pencil);

/// x0 (lambda x2 - mu x3) + x1 (lambda x3 - mu x4).
Pencil family1_normal_form(const PrimeField& field);
/// lambda (x0^2 + x1 x2) + mu (x2 x3 + x4^2).
Pencil family3_normal_form(const PrimeField& field);
/// lambda q1 + mu q2 with q1, q2 random quadrics in x1..x4.
Pencil random_common_vertex_pencil(const PrimeField& field, Rng& rng);

/// A random simultaneous congruence combined with a random basis change.
Pencil random_conjugate(const Pencil& pencil, Rng& rng);

struct NormalFormReduction {
  Pencil pencil;            // the input pencil after the basis change `pencil_change`
  Matrix pencil_change;     // 2 x 2, pencil = input.rebased(pencil_change)
  Matrix coordinates;       // pencil.congruent(coordinates) is the normal form
  PlaneP4 common_plane;
  int attempts;
};

/// Brings a common-plane pencil to family1_normal_form. Throws NotApplicable
/// for other families and NonGeneric after `max_attempts` failed tries.
NormalFormReduction reduce_to_normal_form(const Pencil& pencil, Rng& rng, int max_attempts = 50);

}  // namespace quadrint
