#include "quadrint/sections.hpp"

#include <set>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

namespace {

using Row = std::array<BinaryForm, 5>;

Row zero_row(const PrimeField& f) {
  return {BinaryForm(f), BinaryForm(f), BinaryForm(f), BinaryForm(f), BinaryForm(f)};
}

std::vector<std::pair<Elem, Elem>> sample_parameters(const PrimeField& f) {
  std::vector<std::pair<Elem, Elem>> pts{{1, 0}, {0, 1}, {1, 1}};
  for (Elem t = 2; pts.size() < 6 && t < f.modulus(); ++t) pts.push_back({1, t});
  return pts;
}

std::vector<BinaryForm> raw_minors(const SectionCurve& s) {
  std::vector<BinaryForm> out;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) out.push_back(s.rows[0][i] * s.rows[1][j] - s.rows[0][j] * s.rows[1][i]);
  return out;
}

}  // namespace

PlaneP4 SectionCurve::plane_at(Elem lambda, Elem mu) const {
  const PrimeField& f = pencil.field();
  Vec e1(5), e2(5);
  for (std::size_t k = 0; k < 5; ++k) {
    e1[k] = rows[0][k].eval(lambda, mu);
    e2[k] = rows[1][k].eval(lambda, mu);
  }
  if (rank(Matrix::from_rows(f, {e1, e2})) != 2)
    throw Error(ErrorKind::DegenerateSection, "section rows are dependent at a sample parameter");
  return PlaneP4::from_equations(f, e1, e2);
}

SectionCurve build_section(const Pencil& normal_form, SectionKind kind, Elem a, Elem b) {
  const PrimeField& f = normal_form.field();
  const Pencil expected = family1_normal_form(f);
  if (!(normal_form.first() == expected.first()) || !(normal_form.second() == expected.second()))
    throw Error(ErrorKind::NotApplicable, "sections are defined on the normal form only");
  a %= f.modulus();
  b %= f.modulus();
  if (a == 0 && b == 0) throw Error(ErrorKind::BadParameter, "section parameter (0, 0)");

  const BinaryForm lam = BinaryForm::linear(f, 1, 0);
  const BinaryForm mu = BinaryForm::linear(f, 0, 1);
  SectionCurve s{normal_form, {zero_row(f), zero_row(f)}, {}};
  if (kind == SectionKind::Prime) {
    // l x0 + lambda x3 - mu x4 = 0 and -l x1 + lambda x2 - mu x3 = 0
    const BinaryForm l = BinaryForm::linear(f, a, b);
    s.rows[0][0] = l;
    s.rows[0][3] = lam;
    s.rows[0][4] = mu.scaled(f.neg(1));
    s.rows[1][1] = l.scaled(f.neg(1));
    s.rows[1][2] = lam;
    s.rows[1][3] = mu.scaled(f.neg(1));
    s.id = "C'(" + l.to_string() + ")";
  } else {
    // c = a / b: a x0 - b x1 = 0 and b (lambda x2 - mu x3) = a (mu x4 - lambda x3), negated
    s.rows[0][0] = BinaryForm::constant(f, a);
    s.rows[0][1] = BinaryForm::constant(f, f.neg(b));
    s.rows[1][2] = lam.scaled(f.neg(b));
    s.rows[1][3] = mu.scaled(b) - lam.scaled(a);
    s.rows[1][4] = mu.scaled(a);
    s.id = "C''(" + std::to_string(f.to_signed(a)) + "/" + std::to_string(f.to_signed(b)) + ")";
  }
  if (!validate_section(s)) throw Error(ErrorKind::InternalInconsistency, "section " + s.id + " is off the pencil");
  return s;
}

SectionCurve constant_section(const Pencil& pencil, const PlaneP4& plane, std::string id) {
  const PrimeField& f = pencil.field();
  if (!plane.lies_on(pencil.first()) || !plane.lies_on(pencil.second()))
    throw Error(ErrorKind::NotOnQuadric, "constant section plane is not on every member");
  // Equations of the plane: a basis of the annihilator of its spanning vectors.
  auto eqs = rank_kernel(plane.basis()).kernel;
  SectionCurve s{pencil, {zero_row(f), zero_row(f)}, std::move(id)};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 5; ++k) s.rows[r][k] = BinaryForm::constant(f, eqs[r][k]);
  return s;
}

SectionCurve transport(const SectionCurve& s, const Matrix& g, const Pencil& target) {
  const PrimeField& f = target.field();
  Matrix ginv = inverse(g);
  SectionCurve out{target, {zero_row(f), zero_row(f)}, s.id};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      for (std::size_t k = 0; k < 5; ++k)
        if (ginv(k, c) != 0 && !s.rows[r][k].is_zero())
          out.rows[r][c] = out.rows[r][c] + s.rows[r][k].scaled(ginv(k, c));
  return out;
}

bool validate_section(const SectionCurve& s) {
  for (auto [l, m] : sample_parameters(s.pencil.field())) {
    try {
      if (!s.plane_at(l, m).lies_on(s.pencil.member(l, m))) return false;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateSection) return false;
      throw;
    }
  }
  return true;
}

std::vector<BinaryForm> pluecker_vector(const SectionCurve& s) {
  auto m = raw_minors(s);
  bool any = false;
  for (const auto& x : m) any = any || !x.is_zero();
  if (!any) throw Error(ErrorKind::DegenerateSection, "all Pluecker coordinates vanish");
  BinaryForm g = binary_gcd(m);
  for (auto& x : m)
    if (!x.is_zero()) x = exact_divide(x, g);
  return m;
}

int pluecker_degree(const SectionCurve& s) {
  for (const auto& x : pluecker_vector(s))
    if (!x.is_zero()) return x.degree();
  return 0;
}

int section_meet_pattern(const SectionCurve& a, const SectionCurve& b) {
  auto pa = pluecker_vector(a);
  auto pb = pluecker_vector(b);
  std::vector<BinaryForm> diffs;
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = i + 1; j < pa.size(); ++j) diffs.push_back(pa[i] * pb[j] - pa[j] * pb[i]);
  bool any = false;
  for (const auto& d : diffs) any = any || !d.is_zero();
  if (!any) throw Error(ErrorKind::SameSection, "sections " + a.id + " and " + b.id + " coincide");
  return distinct_root_count(binary_gcd(diffs));
}

int sigma(const SectionCurve& s) {
  const int d1 = pluecker_degree(s);
  const int d2 = hyperplane_degree(s.pencil);
  return ((d2 - d1) % 2 + 2) % 2;
}

int hyperplane_degree(const Pencil& pencil) {
  const PrimeField& f = pencil.field();
  auto c1 = pencil.first().coefficients();
  auto c2 = pencil.second().coefficients();
  std::vector<BinaryForm> coords;
  for (std::size_t k = 0; k < c1.size(); ++k) coords.push_back(BinaryForm::linear(f, c1[k], c2[k]));
  BinaryForm g = binary_gcd(coords);
  for (const auto& c : coords)
    if (!c.is_zero()) return exact_divide(c, g).degree();
  return 0;
}

Lift make_lift(const SectionCurve& s) {
  return {s.id, hyperplane_degree(s.pencil), pluecker_degree(s), sigma(s)};
}

std::string to_string(TorsionVerdict v) { return v == TorsionVerdict::Torsion ? "Torsion" : "NoTorsion"; }

TorsionCertificate torsion_certificate(const Lift& a, const Lift& b) {
  if (a.hyperplane_degree != b.hyperplane_degree)
    throw Error(ErrorKind::NotNumericallyTrivial, "lift degrees " + std::to_string(a.hyperplane_degree) + " and " +
                                                      std::to_string(b.hyperplane_degree) + " differ");
  TorsionCertificate c{a, b, a.sigma != b.sigma ? TorsionVerdict::Torsion : TorsionVerdict::NoTorsion,
                       "H_2 modulo torsion is detected by the hyperplane class; both lifts have degree " +
                           std::to_string(a.hyperplane_degree) + " against it"};
  return c;
}

TorsionEvidence torsion_evidence(const Pencil& pencil, Rng& rng) {
  const PrimeField& f = pencil.field();
  NormalFormReduction red = reduce_to_normal_form(pencil, rng);
  const Pencil normal = family1_normal_form(f);
  auto lift = [&](const SectionCurve& s) {
    SectionCurve t = transport(s, red.coordinates, red.pencil);
    if (!validate_section(t)) throw Error(ErrorKind::InternalInconsistency, "transported section " + s.id + " is off the pencil");
    return t;
  };
  // The plane x0 = x1 = 0 in normal coordinates is the common plane.
  SectionCurve s0 = constant_section(red.pencil, red.common_plane);
  SectionCurve c_prime_l = lift(build_section(normal, SectionKind::Prime, 1, 0));
  SectionCurve c_prime_m = lift(build_section(normal, SectionKind::Prime, 0, 1));
  SectionCurve c_dd_1 = lift(build_section(normal, SectionKind::DoublePrime, 1, 1));
  SectionCurve c_dd_2 = lift(build_section(normal, SectionKind::DoublePrime, 2, 1));

  TorsionEvidence ev{red,
                     pluecker_degree(s0),
                     pluecker_degree(c_dd_1),
                     pluecker_degree(c_prime_l),
                     sigma(s0),
                     sigma(c_dd_1),
                     sigma(c_prime_l),
                     section_meet_pattern(c_prime_l, c_prime_m),
                     section_meet_pattern(c_dd_1, c_dd_2),
                     section_meet_pattern(c_prime_l, c_dd_1),
                     torsion_certificate(make_lift(s0), make_lift(c_dd_1))};
  ev.certificate.first.id = "L' via s0";
  ev.certificate.second.id = "L'' via " + c_dd_1.id;
  return ev;
}

}  // namespace quadrint
