#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadrint/lines.hpp"

namespace quadrint {

/// A section of the plane bundle over a pencil: two hyperplane rows whose
/// entries are binary forms in the pencil parameters (lambda, mu).
struct SectionCurve {
  Pencil pencil;
  std::array<std::array<BinaryForm, 5>, 2> rows;
  std::string id;

  /// The plane at (lambda : mu); throws DegenerateSection if the rows are dependent there.
  PlaneP4 plane_at(Elem lambda, Elem mu) const;
};

enum class SectionKind { Prime, DoublePrime };

/// On the normal form: Prime takes l = a lambda + b mu and gives
/// l x0 = mu x4 - lambda x3, lambda x2 - mu x3 = l x1. DoublePrime takes
/// c = a / b and gives c x0 = x1, lambda x2 - mu x3 = c (mu x4 - lambda x3).
/// Throws NotApplicable off the normal form, BadParameter for (0, 0).
SectionCurve build_section(const Pencil& normal_form, SectionKind kind, Elem a, Elem b);

/// The section with a fixed plane, which must lie on every member.
SectionCurve constant_section(const Pencil& pencil, const PlaneP4& plane, std::string id = "s0");

/// Rows expressed in coordinates x with x' = g^-1 x, over the given pencil.
SectionCurve transport(const SectionCurve& s, const Matrix& g, const Pencil& target);

/// Rows independent and the plane on the member at six sample parameters.
bool validate_section(const SectionCurve& s);

/// The ten 2 x 2 minors of the rows, ordered (0,1), (0,2), ..., (3,4),
/// divided by their gcd. Throws DegenerateSection if all vanish.
std::vector<BinaryForm> pluecker_vector(const SectionCurve& s);
int pluecker_degree(const SectionCurve& s);

/// Parameters where the two planes coincide, counted over the algebraic closure.
/// Throws SameSection if they coincide everywhere.
int section_meet_pattern(const SectionCurve& a, const SectionCurve& b);

/// (1 - pluecker_degree) mod 2 for a section over a line of the quadric space.
int sigma(const SectionCurve& s);

/// Degree of the pencil as a curve in the space of quadrics.
int hyperplane_degree(const Pencil& pencil);

struct Lift {
  std::string id;
  int hyperplane_degree;
  int pluecker_degree;
  int sigma;
};

Lift make_lift(const SectionCurve& s);

enum class TorsionVerdict { Torsion, NoTorsion };
std::string to_string(TorsionVerdict v);

struct TorsionCertificate {
  Lift first;
  Lift second;
  TorsionVerdict verdict;
  std::string hypothesis;
};

/// Throws NotNumericallyTrivial if the hyperplane degrees differ.
TorsionCertificate torsion_certificate(const Lift& a, const Lift& b);

/// Full evidence chain for a common-plane pencil.
struct TorsionEvidence {
  NormalFormReduction reduction;
  int degree_s0;
  int degree_double_prime;
  int degree_prime;
  int sigma_prime_line;         // via s0
  int sigma_double_prime_line;  // via C''(c)
  int sigma_prime_section;      // via C'(l)
  int meet_prime_prime;
  int meet_double_prime_double_prime;
  int meet_prime_double_prime;
  TorsionCertificate certificate;
};

TorsionEvidence torsion_evidence(const Pencil& pencil, Rng& rng);

}  // namespace quadrint
