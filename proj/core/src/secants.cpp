#include "quadrint/secants.hpp"

#include <set>

#include "quadrint/chow.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

namespace {

bool cross_proportional(const BinaryForm& a, const BinaryForm& b) {
  const PrimeField& f = a.field();
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l)
      if (f.mul(a.coeff(k), b.coeff(l)) != f.mul(a.coeff(l), b.coeff(k))) return false;
  return true;
}

Vec line_pluecker(const PrimeField& f, const Vec& u, const Vec& w) {
  Vec out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) out.push_back(f.sub(f.mul(u[i], w[j]), f.mul(u[j], w[i])));
  return normalize_projective(f, out);
}

std::vector<MultiPoly> distinct_nonzero(const std::vector<MultiPoly>& polys) {
  std::vector<MultiPoly> out;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

SecantCertificate five_secant_certificate(const Instance& inst, const Vec& x, Rng& rng,
                                          const std::optional<Vec>& s_point) {
  const PrimeField& f = inst.field();
  auto rk = rank_kernel(inst.M(x));
  if (rk.rank != 3)
    throw Error(ErrorKind::NotRankThree, "rank M(x) = " + std::to_string(rk.rank) + ", the vertex is not a line");
  const Vec& u = rk.kernel[0];
  const Vec& w = rk.kernel[1];
  Matrix nu = inst.N(u), nw = inst.N(w);
  PolyMatrix restricted(f, 2, 6, 5);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t l = 0; l < 5; ++l) restricted(j, l) = MultiPoly::linear(f, Vec{nu(j, l), nw(j, l)});

  SecantCertificate c{x, u, w, line_pluecker(f, u, w), {}, BinaryForm(f), -1, {}, false, std::nullopt, false};
  std::vector<BinaryForm> nonzero;
  for (const auto& m : minors(restricted, 5)) {
    c.minors.push_back(to_binary_form(m));
    if (!c.minors.back().is_zero()) nonzero.push_back(c.minors.back());
  }
  if (nonzero.empty()) throw Error(ErrorKind::LineInsideS, "the vertex line lies on S");
  c.gcd = binary_gcd(nonzero);
  c.gcd_degree = c.gcd.degree();
  if (c.gcd_degree > 0) c.factor_profile = factor_degree_profile(c.gcd);

  c.proportional = true;
  for (int pair = 0; pair < 2; ++pair) {
    const std::size_t i = rng.below(6);
    const std::size_t j = (i + 1 + rng.below(5)) % 6;
    c.proportional = c.proportional && cross_proportional(c.minors[i], c.minors[j]);
  }
  if (s_point) c.hint_on_line = rank(Matrix::from_rows(f, {u, w, *s_point})) == 2;
  c.valid = c.gcd_degree == 5;
  return c;
}

HilbertProfile rank3_locus_profile(const Instance& inst, int dmin, int dmax) {
  return hilbert_profile(distinct_nonzero(minors(inst.M_symbolic(), 4)), 6, dmin, dmax);
}

SecantEvidence secant_family_evidence(const Instance& inst, std::size_t n_samples, Rng& rng, int dmin, int dmax) {
  Rng sampler = rng.split(0);
  Rng checker = rng.split(1);
  SecantEvidence ev{sample_rank3_points(inst, n_samples, sampler), {}, 0, 0, rank3_locus_profile(inst, dmin, dmax), 0};
  std::set<Vec> lines;
  for (const auto& pt : ev.sampling.points) {
    ev.certificates.push_back(five_secant_certificate(inst, pt.x, checker, pt.s_point));
    const auto& c = ev.certificates.back();
    if (c.valid) {
      ++ev.valid_count;
      lines.insert(c.line_pluecker);
    }
  }
  ev.distinct_lines = lines.size();
  ev.dim_estimate = ev.locus.fit.dimension;
  return ev;
}

PlaneSection plane_section_profile(const Instance& inst, Rng& rng, int dmin, int dmax) {
  const PrimeField& f = inst.field();
  std::vector<Vec> plane;
  do {
    plane.clear();
    for (int k = 0; k < 3; ++k) {
      Vec v(5);
      for (auto& e : v) e = rng.element(f);
      plane.push_back(v);
    }
  } while (rank(Matrix::from_rows(f, plane)) != 3);
  std::vector<Matrix> at;
  for (const auto& v : plane) at.push_back(inst.N(v));
  PolyMatrix restricted(f, 3, 6, 5);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t l = 0; l < 5; ++l) restricted(j, l) = MultiPoly::linear(f, Vec{at[0](j, l), at[1](j, l), at[2](j, l)});
  return {plane, hilbert_profile(minors(restricted, 5), 3, dmin, dmax)};
}

std::string to_string(SmoothnessStatus s) {
  switch (s) {
    case SmoothnessStatus::Smooth: return "Smooth";
    case SmoothnessStatus::SingularCandidate: return "SingularCandidate";
    case SmoothnessStatus::Singular: return "Singular";
  }
  return "?";
}

std::vector<SmoothnessResult> s_smoothness_spotcheck(const Instance& inst, const std::vector<Vec>& points) {
  const PrimeField& f = inst.field();
  const auto quintics = minors(inst.N_symbolic(), 5);
  std::vector<std::vector<MultiPoly>> partials;
  for (const auto& q : quintics) {
    partials.emplace_back();
    for (std::size_t v = 0; v < 5; ++v) partials.back().push_back(q.derivative(v));
  }
  std::vector<SmoothnessResult> out;
  for (const auto& y : points) {
    const std::size_t rn = rank(inst.N(y));
    if (rn == 5) throw Error(ErrorKind::NotOnS, "rank N(y) = 5, the point is not on S");
    Matrix jac(f, quintics.size(), 5);
    for (std::size_t r = 0; r < quintics.size(); ++r)
      for (std::size_t v = 0; v < 5; ++v) jac(r, v) = partials[r][v].eval(y);
    const std::size_t by_rows = rank(jac);
    const std::size_t by_cols = rank(jac.transpose());
    if (by_rows != by_cols) throw Error(ErrorKind::InternalInconsistency, "row and column Jacobian ranks differ");
    if (by_rows > 2) throw Error(ErrorKind::InternalInconsistency, "Jacobian rank above the codimension of S");
    SmoothnessStatus st = rn <= 3 ? SmoothnessStatus::SingularCandidate
                                  : (by_rows == 2 ? SmoothnessStatus::Smooth : SmoothnessStatus::Singular);
    out.push_back({y, rn, by_rows, st});
  }
  return out;
}

DivisorCheck dh_divisor_check(const Instance& inst, const Vec& hyperplane, Rng& rng, std::size_t samples) {
  const PrimeField& f = inst.field();
  Matrix h(f, 1, 5);
  for (std::size_t i = 0; i < 5; ++i) h(0, i) = hyperplane.at(i) % f.modulus();
  if (h.is_zero()) throw Error(ErrorKind::BadParameter, "zero hyperplane");
  const auto basis = rank_kernel(h).kernel;

  std::vector<Matrix> restricted_members;
  for (std::size_t j = 0; j < 6; ++j) {
    Vec e(6, 0);
    e[j] = 1;
    restricted_members.push_back(restrict(QuadricForm(inst.M(e)), basis));
  }
  PolyMatrix q(f, 6, 4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Vec coeffs(6);
      for (std::size_t j = 0; j < 6; ++j) coeffs[j] = restricted_members[j](r, c);
      q(r, c) = MultiPoly::linear(f, coeffs);
    }
  DivisorCheck out{hyperplane, determinant(q), 0, 0, 0, 0, intersection_numbers().deg_DH, false};
  out.quartic_degree = out.quartic.is_homogeneous() ? out.quartic.total_degree() : -1;
  out.implied_deg_DH = vertex_divisor_degree(out.quartic_degree, 5, 2);

  const bool can_sample = f.modulus() <= (1ULL << 10U);
  for (std::size_t attempt = 0; can_sample && attempt < 20 * samples && out.samples_checked < samples; ++attempt) {
    std::vector<Vec> plane;
    for (int k = 0; k < 3; ++k) {
      Vec v(5, 0);
      for (const auto& b : basis) {
        const Elem c = rng.element(f);
        for (std::size_t i = 0; i < 5; ++i) v[i] = f.add(v[i], f.mul(c, b[i]));
      }
      plane.push_back(v);
    }
    if (rank(Matrix::from_rows(f, plane)) != 3) continue;
    for (const auto& y : S_points_on_plane(inst, plane)) {
      if (out.samples_checked >= samples) break;
      std::optional<SPointPencil> sp;
      try {
        sp = pencil_at_S_point(inst, y);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnexpectedRank) continue;
        throw;
      }
      Vec x(6);
      const Elem l = rng.element(f), m = rng.element(f);
      for (std::size_t i = 0; i < 6; ++i) x[i] = f.add(f.mul(l, sp->x1[i]), f.mul(m, sp->x2[i]));
      auto rk = rank_kernel(inst.M(x));
      if (rk.rank != 4 || rank(Matrix::from_rows(f, {rk.kernel[0], y})) != 1) continue;
      ++out.samples_checked;
      if (out.quartic.eval(x) == 0) ++out.samples_vanishing;
    }
  }
  out.pass = out.quartic_degree == 4 && out.samples_vanishing == out.samples_checked &&
             out.implied_deg_DH == out.chow_deg_DH && (!can_sample || out.samples_checked > 0);
  return out;
}

}  // namespace quadrint
