#include "quadrint/sampling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quadrint/rng.hpp"

namespace quadrint {

namespace {

constexpr std::uint64_t kEnumerationLimit = 1ULL << 10U;

Vec random_vec(const PrimeField& f, Rng& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rng.element(f);
  return v;
}

std::vector<Vec> random_frame(const PrimeField& f, Rng& rng, std::size_t k, std::size_t n) {
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vec(f, rng, n));
    if (rank(Matrix::from_rows(f, rows)) == k) return rows;
  }
}

Vec combine(const PrimeField& f, const std::vector<Vec>& frame, const Vec& coords) {
  Vec out(frame[0].size(), 0);
  for (std::size_t k = 0; k < frame.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(coords[k], frame[k][i]));
  return out;
}

// Projective points of P^{k-1}(GF(p)) with the first nonzero coordinate 1.
template <typename F>
void for_each_projective_point(const PrimeField& f, std::size_t k, F&& visit) {
  const Elem p = f.modulus();
  Vec c(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    const std::size_t free = k - lead - 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t x = code;
      for (std::size_t i = lead + 1; i < k; ++i) {
        c[i] = x % p;
        x /= p;
      }
      visit(c);
    }
  }
}

// M or N restricted to span(frame), as a matrix of linear forms in the frame coordinates.
template <typename Eval>
PolyMatrix restrict_linear(const PrimeField& f, const std::vector<Vec>& frame, std::size_t rows, std::size_t cols,
                           Eval&& eval) {
  std::vector<Matrix> at;
  for (const auto& v : frame) at.push_back(eval(v));
  PolyMatrix out(f, frame.size(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Vec coeffs(frame.size());
      for (std::size_t k = 0; k < frame.size(); ++k) coeffs[k] = at[k](r, c);
      out(r, c) = MultiPoly::linear(f, coeffs);
    }
  return out;
}

std::vector<Vec> sorted_unique(std::set<Vec> s) { return {s.begin(), s.end()}; }

}  // namespace

std::vector<Vec> S_points_on_plane(const Instance& inst, const std::vector<Vec>& plane) {
  const PrimeField& f = inst.field();
  if (f.modulus() > kEnumerationLimit)
    throw Error(ErrorKind::NotApplicable, "plane enumeration needs p <= 1024");
  auto restricted = restrict_linear(f, plane, 6, 5, [&](const Vec& v) { return inst.N(v); });
  const auto quintics = minors(restricted, 5);
  std::vector<Vec> out;
  for_each_projective_point(f, 3, [&](const Vec& c) {
    for (const auto& q : quintics)
      if (q.eval(c) != 0) return;
    Vec y = normalize_projective(f, combine(f, plane, c));
    if (rank(inst.N(y)) == 4) out.push_back(y);
  });
  return out;
}

namespace {

// Degree-d part of the quotient by the given forms: RREF of the ideal part
// and the standard (non-pivot) monomials.
struct GradedPiece {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t, GrlexLess> index;
  Echelon ideal;
  std::vector<std::size_t> standard;  // column indices
};

GradedPiece graded_piece(const PrimeField& f, const std::vector<MultiPoly>& forms, int d) {
  GradedPiece g{monomials_of_degree(3, d), {}, {Matrix(f, 0, 0), {}}, {}};
  for (std::size_t k = 0; k < g.monomials.size(); ++k) g.index[g.monomials[k]] = k;
  std::vector<Vec> rows;
  for (const auto& q : forms) {
    if (q.is_zero()) continue;
    for (const auto& m : monomials_of_degree(3, d - q.total_degree())) {
      Vec row(g.monomials.size(), 0);
      for (const auto& [mono, c] : q.terms()) row[g.index.at(mono * m)] = c;
      rows.push_back(std::move(row));
    }
  }
  g.ideal = rref(Matrix::from_rows(f, rows));
  std::vector<bool> pivot(g.monomials.size(), false);
  for (auto c : g.ideal.pivots) pivot[c] = true;
  for (std::size_t c = 0; c < g.monomials.size(); ++c)
    if (!pivot[c]) g.standard.push_back(c);
  return g;
}

// Coordinates of the class of a monomial on the standard monomials.
Vec reduce_monomial(const PrimeField& f, const GradedPiece& g, const Monomial& m) {
  Vec v(g.monomials.size(), 0);
  v[g.index.at(m)] = 1;
  for (std::size_t r = 0; r < g.ideal.pivots.size(); ++r) {
    const Elem c = v[g.ideal.pivots[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.sub(v[k], f.mul(c, g.ideal.reduced(r, k)));
  }
  Vec out;
  for (auto c : g.standard) out.push_back(v[c]);
  return out;
}

UniPoly characteristic_polynomial(const Matrix& t) {
  const PrimeField& f = t.field();
  const std::size_t n = t.rows();
  // Interpolate det(s I - T) at s = 0..n.
  Matrix v(f, n + 1, n + 1);
  Vec vals(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    Elem pw = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      v(s, k) = pw;
      pw = f.mul(pw, static_cast<Elem>(s));
    }
    vals[s] = determinant(Matrix::identity(f, n).scaled(static_cast<Elem>(s)) - t);
  }
  return UniPoly(f, inverse(v).apply(vals));
}

}  // namespace

std::vector<Vec> S_points_on_plane_algebraic(const Instance& inst, const std::vector<Vec>& plane) {
  const PrimeField& f = inst.field();
  auto restricted = restrict_linear(f, plane, 6, 5, [&](const Vec& v) { return inst.N(v); });
  const auto quintics = minors(restricted, 5);
  const GradedPiece g6 = graded_piece(f, quintics, 6);
  const GradedPiece g7 = graded_piece(f, quintics, 7);
  const std::size_t n = g6.standard.size();
  if (n == 0 || g7.standard.size() != n) return {};

  std::array<Matrix, 3> mult{Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    const Monomial& s = g6.monomials[g6.standard[c]];
    for (std::size_t v = 0; v < 3; ++v) {
      Monomial z;
      z.exps[v] = 1;
      Vec col = reduce_monomial(f, g7, s * z);
      for (std::size_t r = 0; r < n; ++r) mult[v](r, c) = col[r];
    }
  }
  if (determinant(mult[0]) == 0) return {};
  const Matrix inv0 = inverse(mult[0]);
  // Evaluation at a point P is a common left eigenvector of m_z0^-1 m_zk with eigenvalue z_k/z_0 (P).
  const Matrix t1 = (inv0 * mult[1]).transpose();
  const Matrix t2 = (inv0 * mult[2]).transpose();
  const UniPoly chi = characteristic_polynomial(t1);
  std::vector<Vec> out;
  for (const auto& r : rational_roots(BinaryForm::homogenize(chi, static_cast<int>(n)))) {
    if (r.mu == 0) continue;
    const Elem slope = f.div(r.lambda, r.mu);
    auto ker = rank_kernel(t1 - Matrix::identity(f, n).scaled(slope)).kernel;
    if (ker.size() != 1) continue;
    const Vec& e = ker[0];
    const Vec te = t2.apply(e);
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    const Elem s2 = f.div(te[i], e[i]);
    bool eigen = true;
    for (std::size_t k = 0; k < n; ++k) eigen = eigen && te[k] == f.mul(s2, e[k]);
    if (!eigen) continue;
    Vec y = normalize_projective(f, combine(f, plane, {1, slope, s2}));
    if (rank(inst.N(y)) == 4) out.push_back(y);
  }
  return out;
}

std::vector<Vec> sample_S_points(const Instance& inst, std::size_t count, Rng& rng, SamplingRoute route,
                                 std::size_t max_attempts) {
  const PrimeField& f = inst.field();
  if (count == 0) return {};
  if (route == SamplingRoute::Auto)
    route = f.modulus() <= kEnumerationLimit ? SamplingRoute::PlaneEnumeration : SamplingRoute::PlaneEigenvalues;
  if (max_attempts == 0) max_attempts = 50 * count + 50;
  std::set<Vec> found;
  for (std::size_t attempt = 0; attempt < max_attempts && found.size() < count; ++attempt) {
    if (route == SamplingRoute::PlaneEnumeration) {
      for (auto& y : S_points_on_plane(inst, random_frame(f, rng, 3, 5)))
        if (found.size() < count) found.insert(std::move(y));
      continue;
    }
    for (auto& y : S_points_on_plane_algebraic(inst, random_frame(f, rng, 3, 5)))
      if (found.size() < count) found.insert(std::move(y));
  }
  if (found.size() < count)
    throw SamplingBudgetExceeded("found " + std::to_string(found.size()) + " of " + std::to_string(count) +
                                     " S-points",
                                 sorted_unique(found));
  return sorted_unique(found);
}

SPointPencil pencil_at_S_point(const Instance& inst, const Vec& y) {
  auto rk = rank_kernel(inst.N(y).transpose());
  if (rk.kernel.size() != 2)
    throw Error(ErrorKind::UnexpectedRank, "ker N(y)^T has dimension " + std::to_string(rk.kernel.size()));
  const Vec& x1 = rk.kernel[0];
  const Vec& x2 = rk.kernel[1];
  return {y, x1, x2, Pencil(QuadricForm(inst.M(x1)), QuadricForm(inst.M(x2)))};
}

BinaryForm reduced_quartic(const SPointPencil& sp) {
  const PrimeField& f = sp.pencil.field();
  auto basis = complete_basis(f, {sp.y}, 5);
  std::vector<Vec> comp(basis.begin() + 1, basis.end());
  Matrix r1 = restrict(sp.pencil.first(), comp);
  Matrix r2 = restrict(sp.pencil.second(), comp);
  PolyMatrix m(f, 2, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = MultiPoly::linear(f, Vec{r1(i, j), r2(i, j)});
  return to_binary_form(determinant(m));
}

std::vector<Vec> rank3_points_on_3plane(const Instance& inst, Rng& rng) {
  const PrimeField& f = inst.field();
  if (f.modulus() > kEnumerationLimit)
    throw Error(ErrorKind::NotApplicable, "3-plane enumeration needs p <= 1024");
  auto frame = random_frame(f, rng, 4, 6);
  auto restricted = restrict_linear(f, frame, 5, 5, [&](const Vec& v) { return inst.M(v); });
  MultiPoly det = determinant(restricted);
  std::vector<Vec> out;
  for_each_projective_point(f, 4, [&](const Vec& c) {
    if (det.eval(c) != 0) return;
    Vec x = normalize_projective(f, combine(f, frame, c));
    if (rank(inst.M(x)) == 3) out.push_back(x);
  });
  return out;
}

Rank3Sampling sample_rank3_points(const Instance& inst, std::size_t count, Rng& rng, SamplingRoute route,
                                  bool enumeration_fallback, std::size_t max_pencils) {
  const PrimeField& f = inst.field();
  Rank3Sampling out;
  if (count == 0) return out;
  if (max_pencils == 0) max_pencils = 20 * count + 20;
  std::set<Vec> seen;
  while (out.points.size() < count && out.pencils_tried < max_pencils) {
    ++out.pencils_tried;
    Vec y = sample_S_points(inst, 1, rng, route).front();
    std::optional<SPointPencil> sp;
    try {
      sp = pencil_at_S_point(inst, y);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnexpectedRank || e.kind() == ErrorKind::DegenerateInput) continue;
      throw;
    }
    BinaryForm quartic = reduced_quartic(*sp);
    if (quartic.is_zero()) continue;
    bool productive = false;
    for (const auto& r : rational_roots(quartic)) {
      Vec x(6);
      for (std::size_t i = 0; i < 6; ++i) x[i] = f.add(f.mul(r.lambda, sp->x1[i]), f.mul(r.mu, sp->x2[i]));
      x = normalize_projective(f, x);
      if (rank(inst.M(x)) != 3 || !seen.insert(x).second) continue;
      productive = true;
      if (out.points.size() < count) out.points.push_back({x, y});
    }
    if (productive) ++out.pencils_with_roots;
  }
  if (out.points.size() < count && enumeration_fallback && f.modulus() <= kEnumerationLimit) {
    for (std::size_t planes = 0; planes < 4 * count && out.points.size() < count; ++planes) {
      ++out.fallback_planes;
      for (auto& x : rank3_points_on_3plane(inst, rng))
        if (seen.insert(x).second && out.points.size() < count) out.points.push_back({x, std::nullopt});
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const Rank3Point& a, const Rank3Point& b) { return a.x < b.x; });
  if (out.points.size() < count) {
    std::vector<Vec> partial;
    for (const auto& p : out.points) partial.push_back(p.x);
    throw SamplingBudgetExceeded("found " + std::to_string(partial.size()) + " of " + std::to_string(count) +
                                     " rank-3 points",
                                 partial);
  }
  return out;
}

}  // namespace quadrint
