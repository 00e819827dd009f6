#include "doctest.h"
#include "quadrint/error.hpp"
#include "quadrint/sections.hpp"
#include "support.hpp"

using namespace quadrint;

namespace {

int oracle_pluecker_degree(const SectionCurve& s, int raw_degree) {
  // Evaluate the rows, take numeric 2 x 2 minors, and look for parameters where
  // all of them vanish; without such points no factor can be removed.
  const PrimeField& f = s.pencil.field();
  auto minors_at = [&](Elem l, Elem m) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        out.push_back(f.sub(f.mul(s.rows[0][i].eval(l, m), s.rows[1][j].eval(l, m)),
                            f.mul(s.rows[0][j].eval(l, m), s.rows[1][i].eval(l, m))));
    return out;
  };
  auto all_zero = [](const std::vector<Elem>& v) {
    for (auto x : v)
      if (x != 0) return false;
    return true;
  };
  if (all_zero(minors_at(1, 0))) return -1;
  for (Elem t = 0; t < f.modulus(); ++t)
    if (all_zero(minors_at(t, 1))) return -1;
  // Interpolate each coordinate in t from raw_degree + 2 samples and confirm the degree.
  const std::size_t n = static_cast<std::size_t>(raw_degree) + 2;
  Matrix v(f, n, n);
  std::vector<std::vector<Elem>> samples;
  for (Elem t = 0; t < n; ++t) {
    Elem pw = 1;
    for (std::size_t k = 0; k < n; ++k) {
      v(t, k) = pw;
      pw = f.mul(pw, t);
    }
    samples.push_back(minors_at(t, 1));
  }
  Matrix vinv = inverse(v);
  int top = -1;
  for (std::size_t c = 0; c < 10; ++c) {
    Vec vals(n);
    for (std::size_t t = 0; t < n; ++t) vals[t] = samples[t][c];
    Vec coeffs = vinv.apply(vals);
    for (std::size_t k = 0; k < n; ++k)
      if (coeffs[k] != 0) top = std::max(top, static_cast<int>(k));
  }
  // A coordinate of exact degree raw_degree in t, or a vanishing value at
  // (1:0), keeps the homogeneous degree at raw_degree.
  return top <= raw_degree ? raw_degree : -1;
}

}  // namespace

TEST_CASE("classification of the three normal forms") {
  PrimeField f(101);
  Rng rng(43);

  auto c1 = classify_line(family1_normal_form(f));
  CHECK(c1.family == LineFamily::CommonPlane);
  REQUIRE(c1.common_plane);
  CHECK(*c1.common_plane == PlaneP4::from_equations(f, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}));
  CHECK(c1.locus.distinct_count == 0);

  auto fam2 = random_common_vertex_pencil(f, rng);
  auto c2 = classify_line(fam2);
  CHECK(c2.family == LineFamily::CommonVertex);
  REQUIRE(c2.common_vertex);
  CHECK(*c2.common_vertex == Vec{1, 0, 0, 0, 0});
  CHECK(c2.locus.distinct_count == 4);

  auto c3 = classify_line(family3_normal_form(f));
  CHECK(c3.family == LineFamily::Rank2Special);
  CHECK(c3.locus.distinct_count == 2);
  REQUIRE(c3.tangency.size() == 2);
  // (0:1): vertex line x2 = x3 = x4 = 0, restriction of x0^2 + x1 x2 is x0^2.
  CHECK(c3.tangency[0].point == ProjectiveRoot{0, 1, 1});
  CHECK(c3.tangency[0].u == Vec{1, 0, 0, 0, 0});
  CHECK(c3.tangency[0].restriction == BinaryForm::monomial(f, 2, 0));
  // (1:0): vertex line x0 = x1 = x2 = 0, restriction of x2 x3 + x4^2 is x4^2.
  CHECK(c3.tangency[1].point == ProjectiveRoot{1, 0, 1});
  CHECK(c3.tangency[1].w == Vec{0, 0, 0, 0, 1});
  CHECK(c3.tangency[1].restriction == BinaryForm::monomial(f, 0, 2));
}

TEST_CASE("preimage verdicts") {
  PrimeField f(101);
  Rng rng(47);
  auto p1 = preimage_analysis(family1_normal_form(f));
  CHECK(p1.ramification == 0);
  CHECK(p1.verdict == PreimageVerdict::SplitTwoLines);
  auto p2 = preimage_analysis(random_common_vertex_pencil(f, rng));
  CHECK(p2.ramification == 4);
  CHECK(p2.verdict == PreimageVerdict::Irreducible);
  CHECK(p2.genus == 1);
  auto p3 = preimage_analysis(family3_normal_form(f));
  CHECK(p3.ramification == 2);
  CHECK(p3.genus == 0);
}

TEST_CASE("non-generic pencils") {
  PrimeField f(101);
  // lambda x0^2 + mu (x1^2 + x2^2 + x3^2): the locus (lambda) appears to high order.
  Pencil p(QuadricForm::from_terms(f, 5, {{0, 0, 1}}), QuadricForm::from_terms(f, 5, {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}}));
  auto c = classify_line(p);
  CHECK(c.family == LineFamily::NonGeneric);
  CHECK_FALSE(c.reason.empty());
  CHECK_THROWS_AS(preimage_analysis(p), Error);
}

TEST_CASE("classification is invariant under 50 random conjugates") {
  PrimeField f(101);
  Rng rng(53);
  const Pencil forms[3] = {family1_normal_form(f), random_common_vertex_pencil(f, rng), family3_normal_form(f)};
  const LineFamily expected[3] = {LineFamily::CommonPlane, LineFamily::CommonVertex, LineFamily::Rank2Special};
  const int counts[3] = {0, 4, 2};
  for (int k = 0; k < 3; ++k)
    for (int trial = 0; trial < 50; ++trial) {
      Pencil conj = random_conjugate(forms[k], rng);
      auto c = classify_line(conj);
      CHECK(c.family == expected[k]);
      CHECK(c.locus.distinct_count == counts[k]);
      CHECK(preimage_analysis(conj).ramification == counts[k]);
    }
}

TEST_CASE("common plane via vertices agrees with enumeration") {
  PrimeField f(101);
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    Pencil conj = random_conjugate(family1_normal_form(f), rng);
    auto c = classify_line(conj);
    REQUIRE(c.common_plane);
    auto v = common_plane_from_vertices(conj);
    REQUIRE(v);
    CHECK(*v == *c.common_plane);
  }
  PrimeField big(32003);
  auto c = classify_line(random_conjugate(family1_normal_form(big), rng));
  CHECK(c.family == LineFamily::CommonPlane);
}

TEST_CASE("section rows") {
  PrimeField f(101);
  auto n = family1_normal_form(f);
  auto lam = BinaryForm::linear(f, 1, 0), mu = BinaryForm::linear(f, 0, 1), zero = BinaryForm(f);
  auto neg = [&](const BinaryForm& b) { return b.scaled(f.neg(1)); };

  auto cp = build_section(n, SectionKind::Prime, 1, 0);
  CHECK(cp.rows[0] == std::array<BinaryForm, 5>{lam, zero, zero, lam, neg(mu)});
  CHECK(cp.rows[1] == std::array<BinaryForm, 5>{zero, neg(lam), lam, neg(mu), zero});

  auto cd = build_section(n, SectionKind::DoublePrime, 1, 1);
  auto one = BinaryForm::constant(f, 1);
  CHECK(cd.rows[0] == std::array<BinaryForm, 5>{one, neg(one), zero, zero, zero});
  CHECK(cd.rows[1] == std::array<BinaryForm, 5>{zero, zero, neg(lam), mu - lam, mu});

  for (const auto* s : {&cp, &cd}) {
    CHECK(s->plane_at(1, 1).lies_on(n.member(1, 1)));
    CHECK(validate_section(*s));
  }
  CHECK_THROWS_AS(build_section(n, SectionKind::Prime, 0, 0), Error);
  CHECK_THROWS_AS(build_section(n, SectionKind::DoublePrime, 0, 0), Error);
  CHECK_THROWS_AS(build_section(family3_normal_form(f), SectionKind::Prime, 1, 0), Error);
  // c = infinity is a valid section.
  CHECK(validate_section(build_section(n, SectionKind::DoublePrime, 1, 0)));
}

TEST_CASE("Pluecker degrees and sigma") {
  PrimeField f(101);
  Rng rng(61);
  auto n = family1_normal_form(f);
  auto s0 = constant_section(n, PlaneP4::from_equations(f, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}));
  CHECK(pluecker_degree(s0) == 0);
  CHECK(sigma(s0) == 1);
  CHECK(hyperplane_degree(n) == 1);

  for (int k = 0; k < 10; ++k) {
    Elem a = rng.element(f), b = rng.nonzero(f);
    auto cp = build_section(n, SectionKind::Prime, a, b);
    auto cd = build_section(n, SectionKind::DoublePrime, a, b);
    CHECK(pluecker_degree(cp) == 2);
    CHECK(oracle_pluecker_degree(cp, 2) == 2);
    CHECK(pluecker_degree(cd) == 1);
    CHECK(oracle_pluecker_degree(cd, 1) == 1);
    CHECK(sigma(cp) == 1);
    CHECK(sigma(cd) == 0);
    CHECK(sigma(s0) + sigma(cd) == 1);
  }
  auto pv = pluecker_vector(build_section(n, SectionKind::Prime, 1, 0));
  CHECK(binary_gcd(pv).degree() == 0);
}

TEST_CASE("section meet patterns") {
  PrimeField f(101);
  Rng rng(67);
  auto n = family1_normal_form(f);
  CHECK(section_meet_pattern(build_section(n, SectionKind::Prime, 1, 0), build_section(n, SectionKind::Prime, 0, 1)) == 1);
  CHECK(section_meet_pattern(build_section(n, SectionKind::DoublePrime, 1, 1),
                             build_section(n, SectionKind::DoublePrime, 2, 1)) == 0);
  int smoke = section_meet_pattern(build_section(n, SectionKind::Prime, 1, 0), build_section(n, SectionKind::DoublePrime, 1, 1));
  CHECK(smoke >= 0);
  for (int k = 0; k < 10; ++k) {
    Elem a1 = rng.element(f), b1 = rng.nonzero(f), a2 = rng.element(f), b2 = rng.nonzero(f);
    if (f.mul(a1, b2) == f.mul(a2, b1)) continue;
    CHECK(section_meet_pattern(build_section(n, SectionKind::Prime, a1, b1), build_section(n, SectionKind::Prime, a2, b2)) == 1);
    CHECK(section_meet_pattern(build_section(n, SectionKind::DoublePrime, a1, b1),
                               build_section(n, SectionKind::DoublePrime, a2, b2)) == 0);
  }
  auto s = build_section(n, SectionKind::Prime, 3, 4);
  CHECK_THROWS_AS(section_meet_pattern(s, s), Error);
}

TEST_CASE("degenerate sections") {
  PrimeField f(101);
  auto n = family1_normal_form(f);
  auto s = build_section(n, SectionKind::Prime, 1, 0);
  s.rows[1] = s.rows[0];
  CHECK_THROWS_AS(pluecker_degree(s), Error);
  CHECK_FALSE(validate_section(s));
}

TEST_CASE("torsion certificates") {
  PrimeField f(101);
  auto n = family1_normal_form(f);
  auto s0 = constant_section(n, PlaneP4::from_equations(f, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}));
  auto lp = make_lift(s0);
  auto lpp = make_lift(build_section(n, SectionKind::DoublePrime, 1, 1));
  auto lp2 = make_lift(build_section(n, SectionKind::Prime, 1, 0));
  auto t = torsion_certificate(lp, lpp);
  CHECK(t.verdict == TorsionVerdict::Torsion);
  CHECK(t.first.sigma == 1);
  CHECK(t.second.sigma == 0);
  CHECK(t.first.hyperplane_degree == 1);
  CHECK(t.second.hyperplane_degree == 1);
  CHECK(torsion_certificate(lp, lp2).verdict == TorsionVerdict::NoTorsion);
  CHECK(torsion_certificate(lpp, lpp).verdict == TorsionVerdict::NoTorsion);
  auto bad = lpp;
  bad.hyperplane_degree = 2;
  CHECK_THROWS_AS(torsion_certificate(lp, bad), Error);
}

TEST_CASE("torsion evidence on the normal form and its conjugates") {
  PrimeField f(101);
  Rng rng(71);
  auto ev = torsion_evidence(family1_normal_form(f), rng);
  CHECK(ev.degree_s0 == 0);
  CHECK(ev.degree_double_prime == 1);
  CHECK(ev.degree_prime == 2);
  CHECK(ev.sigma_prime_line == 1);
  CHECK(ev.sigma_double_prime_line == 0);
  CHECK(ev.sigma_prime_section == 1);
  CHECK(ev.meet_prime_prime == 1);
  CHECK(ev.meet_double_prime_double_prime == 0);
  CHECK(ev.certificate.verdict == TorsionVerdict::Torsion);
  CHECK(ev.reduction.attempts == 1);

  for (int trial = 0; trial < 20; ++trial) {
    Pencil conj = random_conjugate(family1_normal_form(f), rng);
    auto e = torsion_evidence(conj, rng);
    CHECK(e.sigma_prime_line + e.sigma_double_prime_line == 1);
    CHECK(e.certificate.verdict == TorsionVerdict::Torsion);
    CHECK(e.meet_prime_prime == 1);
    CHECK(e.meet_double_prime_double_prime == 0);
    auto moved = e.reduction.pencil.congruent(e.reduction.coordinates);
    CHECK(moved.first() == family1_normal_form(f).first());
  }
  CHECK_THROWS_AS(reduce_to_normal_form(family3_normal_form(f), rng), Error);
}
