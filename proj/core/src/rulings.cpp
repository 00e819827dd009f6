#include "quadrint/rulings.hpp"

#include <algorithm>
#include <sstream>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

PlaneP4 PlaneP4::from_spanning(const PrimeField& field, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != 5) throw Error(ErrorKind::BadDimension, "plane vectors must have length 5");
  Echelon e = rref(Matrix::from_rows(field, vectors));
  if (e.pivots.size() != 3) throw Error(ErrorKind::BadDimension, "vectors do not span a 2-plane");
  return PlaneP4(std::move(e.reduced));
}

PlaneP4 PlaneP4::from_equations(const PrimeField& field, const Vec& eq1, const Vec& eq2) {
  RankKernel rk = rank_kernel(Matrix::from_rows(field, {eq1, eq2}));
  if (rk.rank != 2) throw Error(ErrorKind::BadDimension, "plane equations are dependent");
  return from_spanning(field, rk.kernel);
}

std::vector<Vec> PlaneP4::spanning() const { return {basis_.row(0), basis_.row(1), basis_.row(2)}; }

bool PlaneP4::contains(const Vec& v) const {
  auto rows = spanning();
  rows.push_back(v);
  return rank(Matrix::from_rows(basis_.field(), rows)) == 3;
}

bool PlaneP4::lies_on(const QuadricForm& q) const { return restrict(q, spanning()).is_zero(); }

bool PlaneP4::operator<(const PlaneP4& o) const noexcept {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      if (basis_(r, c) != o.basis_(r, c)) return basis_(r, c) < o.basis_(r, c);
  return false;
}

std::string PlaneP4::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < 3; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < 5; ++c) os << (c ? " " : "") << basis_(r, c);
  }
  os << "]";
  return os.str();
}

std::size_t intersection_dimension(const PlaneP4& a, const PlaneP4& b) {
  auto rows = a.spanning();
  for (auto& v : b.spanning()) rows.push_back(v);
  return 6 - rank(Matrix::from_rows(a.basis().field(), rows));
}

namespace {

void require_rank4(const QuadricForm& q) {
  if (q.dim() != 5) throw Error(ErrorKind::BadDimension, "expected a quadric in P^4");
  if (q.rank() != 4) throw Error(ErrorKind::NotApplicable, "quadric does not have rank 4");
}

void require_through_vertex(const QuadricForm& q, const Vec& vertex, const PlaneP4& plane) {
  if (!plane.lies_on(q)) throw Error(ErrorKind::NotOnQuadric, "plane is not contained in the quadric");
  if (!plane.contains(vertex)) throw Error(ErrorKind::NotOnQuadric, "plane misses the vertex");
}

Vec combine(const PrimeField& f, Elem a, const Vec& x, Elem b, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(f.mul(a, x[i]), f.mul(b, y[i]));
  return out;
}

// For a point r on a line L = span(r, a) of a smooth quadric surface, the other
// line through r: inside the tangent plane span(r, a, c) the form reads
// z (2 y B(a,c) + z q(c)) for y a + z c, so the second line has direction
// -q(c) a + 2 B(a,c) c.
std::pair<Vec, Vec> other_line(const QuadricForm& q, const Vec& r, const Vec& a) {
  const PrimeField& f = q.field();
  const Vec br = q.matrix().apply(r);
  RankKernel tangent = rank_kernel(Matrix::from_rows(f, {br}));
  std::vector<Vec> in_line{r, a};
  Vec c;
  for (const auto& t : tangent.kernel) {
    auto probe = in_line;
    probe.push_back(t);
    if (rank(Matrix::from_rows(f, probe)) == 3) {
      c = t;
      break;
    }
  }
  if (c.empty()) throw Error(ErrorKind::InternalInconsistency, "tangent plane degenerate");
  const Elem bac = q.polar(a, c);
  if (bac == 0) throw Error(ErrorKind::InternalInconsistency, "quadric surface is singular");
  Vec d = combine(f, f.neg(q.value(c)), a, f.add(bac, bac), c);
  return {r, d};
}

}  // namespace

bool same_ruling(const QuadricForm& q, const PlaneP4& a, const PlaneP4& b) {
  require_rank4(q);
  const Vec v = q.vertex().front();
  require_through_vertex(q, v, a);
  require_through_vertex(q, v, b);
  return intersection_dimension(a, b) % 2 == 1;
}

Rulings planes_on(const QuadricForm& q) {
  require_rank4(q);
  const PrimeField& f = q.field();
  if (f.modulus() > (1ULL << 10U)) throw Error(ErrorKind::NotApplicable, "plane enumeration requires p <= 2^10");
  const Vec vertex = q.vertex().front();
  // Complement of the vertex: the quotient quadric surface lives in span(w).
  std::vector<Vec> basis = complete_basis(f, {vertex}, 5);
  std::vector<Vec> w(basis.begin() + 1, basis.end());
  QuadricForm surface(restrict(q, w));

  // A rational point of the surface from a random secant line.
  Rng rng(f.modulus() * 0x9E3779B97F4A7C15ULL + 0xC0FFEE);
  Vec point;
  for (int attempt = 0; attempt < 4096 && point.empty(); ++attempt) {
    Vec a(4), b(4);
    for (auto& x : a) x = rng.element(f);
    for (auto& x : b) x = rng.element(f);
    if (rank(Matrix::from_rows(f, {a, b})) != 2) continue;
    BinaryForm g = restrict_to_line(surface, a, b);
    if (g.is_zero()) {
      point = a;
      break;
    }
    auto roots = rational_roots(g);
    if (!roots.empty()) point = combine(f, roots.front().lambda, a, roots.front().mu, b);
  }
  if (point.empty()) throw Error(ErrorKind::NonSplitQuadric, "no rational point found on the quadric surface");

  // The tangent plane section at the point is the pair of lines through it.
  const Vec bp = surface.matrix().apply(point);
  RankKernel tangent = rank_kernel(Matrix::from_rows(f, {bp}));
  std::vector<Vec> complement;
  for (const auto& t : tangent.kernel) {
    auto probe = complement;
    probe.push_back(point);
    probe.push_back(t);
    if (rank(Matrix::from_rows(f, probe)) == probe.size()) complement.push_back(t);
    if (complement.size() == 2) break;
  }
  BinaryForm section = restrict_to_line(surface, complement[0], complement[1]);
  auto dirs = rational_roots(section);
  if (dirs.size() < 2) throw Error(ErrorKind::NonSplitQuadric, "rank-4 quadric has no rational rulings");
  const Vec dir_a = combine(f, dirs[0].lambda, complement[0], dirs[0].mu, complement[1]);
  const Vec dir_b = combine(f, dirs[1].lambda, complement[0], dirs[1].mu, complement[1]);

  // Sweep the points of each line; the other line through each point belongs to the opposite ruling.
  auto lift = [&](const Vec& x) {
    Vec out(5, 0);
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < 5; ++i) out[i] = f.add(out[i], f.mul(x[k], w[k][i]));
    return out;
  };
  std::vector<PlaneP4> planes;
  for (const auto& [start, dir] : {std::pair{point, dir_a}, std::pair{point, dir_b}}) {
    std::vector<Vec> pts{dir};
    for (Elem s = 0; s < f.modulus(); ++s) pts.push_back(combine(f, s, dir, 1, start));
    for (const auto& r : pts) {
      const Vec a = (r == dir) ? start : dir;
      auto [l0, l1] = other_line(surface, r, a);
      planes.push_back(PlaneP4::from_spanning(f, {vertex, lift(l0), lift(l1)}));
    }
  }
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

  Rulings out;
  const PlaneP4& anchor = planes.front();
  for (const auto& pl : planes) out.classes[same_ruling(q, anchor, pl) ? 0 : 1].push_back(pl);
  const std::size_t expected = f.modulus() + 1;
  if (out.classes[0].size() != expected || out.classes[1].size() != expected)
    throw Error(ErrorKind::InternalInconsistency, "ruling classes do not have p+1 planes each");
  return out;
}

WPoint::WPoint(QuadricForm q, PlaneP4 plane) : q_(std::move(q)), plane_(std::move(plane)) {
  require_rank4(q_);
  require_through_vertex(q_, q_.vertex().front(), plane_);
}

bool WPoint::operator==(const WPoint& o) const {
  return q_.proportional(o.q_) && same_ruling(q_, plane_, o.plane_);
}

std::vector<QuadricForm> quadrics_through_plane(const PrimeField& field, const PlaneP4& plane) {
  // Unknowns: the 15 Gram entries B_ij, i <= j. Equations: (S^T B S)_kl = 0 for k <= l.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) slots.emplace_back(i, j);
  const auto s = plane.spanning();
  Matrix eqs(field, 6, 15);
  std::size_t row = 0;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = k; l < 3; ++l, ++row)
      for (std::size_t u = 0; u < slots.size(); ++u) {
        const auto [i, j] = slots[u];
        Elem c = field.mul(s[k][i], s[l][j]);
        if (i != j) c = field.add(c, field.mul(s[k][j], s[l][i]));
        eqs(row, u) = c;
      }
  std::vector<QuadricForm> out;
  for (const auto& v : rank_kernel(eqs).kernel) {
    Matrix b(field, 5, 5);
    for (std::size_t u = 0; u < slots.size(); ++u) {
      const auto [i, j] = slots[u];
      b(i, j) = b(j, i) = v[u];
    }
    out.emplace_back(std::move(b));
  }
  return out;
}

}  // namespace quadrint
