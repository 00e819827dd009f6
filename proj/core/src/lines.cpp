#include "quadrint/lines.hpp"

#include <utility>

#include "quadrint/error.hpp"
#include "quadrint/rng.hpp"

namespace quadrint {

namespace {

// Members of rank exactly `target_rank`, at (1:0), (0:1), (1:1), (1:2), ...
std::vector<QuadricForm> members_of_rank(const Pencil& pencil, std::size_t target_rank, std::size_t count) {
  const PrimeField& f = pencil.field();
  std::vector<QuadricForm> out;
  auto try_point = [&](Elem l, Elem m) {
    if (out.size() >= count) return;
    QuadricForm q = pencil.member(l, m);
    if (q.rank() == target_rank) out.push_back(std::move(q));
  };
  try_point(1, 0);
  try_point(0, 1);
  for (Elem t = 1; t < f.modulus() && out.size() < count; ++t) try_point(1, t);
  return out;
}

bool on_all(const PlaneP4& plane, const std::vector<QuadricForm>& members) {
  for (const auto& q : members)
    if (!plane.lies_on(q)) return false;
  return true;
}

std::optional<PlaneP4> common_plane_by_enumeration(const Pencil& pencil) {
  auto members = members_of_rank(pencil, 4, 5);
  if (members.size() < 2) return std::nullopt;
  Rulings rulings;
  try {
    rulings = planes_on(members[0]);
  } catch (const Error& e) {
    // A member without rational planes cannot contain a common plane.
    if (e.kind() == ErrorKind::NonSplitQuadric) return std::nullopt;
    throw;
  }
  for (const auto& cls : rulings.classes)
    for (const auto& plane : cls)
      if (plane.lies_on(members[1]) && on_all(plane, members)) return plane;
  return std::nullopt;
}

bool is_square_form(const BinaryForm& q) {
  if (q.is_zero()) return false;
  const PrimeField& f = q.field();
  const Elem disc = f.sub(f.mul(q.coeff(1), q.coeff(1)), f.mul(4, f.mul(q.coeff(0), q.coeff(2))));
  return disc == 0;
}

// Solves A x = b, returning one solution if consistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  const PrimeField& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = rref(aug);
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

Matrix random_invertible(const PrimeField& f, Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.element(f);
    if (determinant(m) != 0) return m;
  }
}

// One reduction attempt on a pencil with known common plane.
std::optional<Matrix> try_reduce(const Pencil& pencil, const PlaneP4& plane, const Matrix& complement_mix) {
  const PrimeField& f = pencil.field();
  const auto pv = plane.spanning();
  auto basis = complete_basis(f, pv, 5);  // pv first, then two complement vectors
  Vec u0 = basis[3], u1 = basis[4];
  // Random mixing of the complement keeps retries from repeating the same choice.
  for (std::size_t k = 0; k < 5; ++k) {
    Elem a = f.add(f.mul(complement_mix(0, 0), u0[k]), f.mul(complement_mix(0, 1), u1[k]));
    Elem b = f.add(f.mul(complement_mix(1, 0), u0[k]), f.mul(complement_mix(1, 1), u1[k]));
    u0[k] = a;
    u1[k] = b;
  }
  auto frame = [&](const Vec& a, const Vec& b) {
    return Matrix::from_columns(f, {a, b, pv[0], pv[1], pv[2]});
  };
  const std::array<const Matrix*, 2> gram{&pencil.first().matrix(), &pencil.second().matrix()};

  // Clear the (u, u) block: D_i + C_i K + K^T C_i^T = 0 for K in 3 x 2.
  Matrix t0 = frame(u0, u1);
  Matrix sys(f, 6, 6);
  Vec rhs(6, 0);
  std::size_t eq = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    Matrix m = t0.transpose() * *gram[i] * t0;
    const std::pair<std::size_t, std::size_t> entries[3] = {{0, 0}, {0, 1}, {1, 1}};
    for (auto [r, s] : entries) {
      // unknown K[a][c] has index a * 2 + c
      for (std::size_t a = 0; a < 3; ++a) {
        sys(eq, a * 2 + s) = f.add(sys(eq, a * 2 + s), m(r, 2 + a));
        sys(eq, a * 2 + r) = f.add(sys(eq, a * 2 + r), m(s, 2 + a));
      }
      rhs[eq] = f.neg(m(r, s));
      ++eq;
    }
  }
  auto k = solve(sys, rhs);
  if (!k) return std::nullopt;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 5; ++c) {
      u0[c] = f.add(u0[c], f.mul((*k)[a * 2 + 0], pv[a][c]));
      u1[c] = f.add(u1[c], f.mul((*k)[a * 2 + 1], pv[a][c]));
    }
  Matrix t = frame(u0, u1);

  // F[i][r] = 2 C_i[r]: the linear form on the plane multiplying z_r in member i.
  Vec forms[2][2];
  for (std::size_t i = 0; i < 2; ++i) {
    Matrix m = t.transpose() * *gram[i] * t;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s)
        if (m(r, s) != 0) return std::nullopt;
    for (std::size_t r = 0; r < 2; ++r) {
      forms[i][r] = Vec(3);
      for (std::size_t a = 0; a < 3; ++a) forms[i][r][a] = f.add(m(r, 2 + a), m(r, 2 + a));
    }
  }
  Matrix cols = Matrix::from_columns(f, {forms[0][0], forms[0][1], forms[1][0], forms[1][1]});
  auto rk = rank_kernel(cols);
  if (rk.rank != 3) return std::nullopt;
  const Vec& rel = rk.kernel[0];
  Matrix rho(f, 2, 2);
  rho(0, 0) = rel[0];
  rho(0, 1) = rel[1];
  rho(1, 0) = rel[2];
  rho(1, 1) = rel[3];
  if (determinant(rho) == 0) return std::nullopt;
  Matrix j(f, {{0, 1}, {1, 0}});
  Matrix s = rho.transpose() * j;

  Vec fp[2][2];
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t r = 0; r < 2; ++r) {
      fp[i][r] = Vec(3, 0);
      for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t a = 0; a < 3; ++a) fp[i][r][a] = f.add(fp[i][r][a], f.mul(forms[i][q][a], s(q, r)));
    }
  Vec neg11(3);
  for (std::size_t a = 0; a < 3; ++a) neg11[a] = f.neg(fp[1][1][a]);
  Matrix y = Matrix::from_rows(f, {fp[0][0], fp[0][1], neg11});
  if (determinant(y) == 0) return std::nullopt;
  Matrix yinv = inverse(y);

  Matrix block(f, 5, 5);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) block(r, c) = s(r, c);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) block(2 + r, 2 + c) = yinv(r, c);
  Matrix g = t * block;

  const Pencil normal = family1_normal_form(f);
  Pencil moved = pencil.congruent(g);
  if (!(moved.first() == normal.first()) || !(moved.second() == normal.second())) return std::nullopt;
  return g;
}

}  // namespace

std::string to_string(LineFamily f) {
  switch (f) {
    case LineFamily::CommonPlane: return "CommonPlane";
    case LineFamily::CommonVertex: return "CommonVertex";
    case LineFamily::Rank2Special: return "Rank2Special";
    case LineFamily::NonGeneric: return "NonGeneric";
  }
  return "?";
}

std::optional<PlaneP4> common_plane_from_vertices(const Pencil& pencil) {
  const PrimeField& f = pencil.field();
  auto members = members_of_rank(pencil, 4, 6);
  if (members.size() < 3) return std::nullopt;
  std::vector<Vec> vertices;
  for (const auto& q : members) vertices.push_back(q.vertex().at(0));
  // Every plane on a rank-4 quadric of P^4 passes through its vertex.
  Echelon e = rref(Matrix::from_rows(f, vertices));
  if (e.pivots.size() != 3) return std::nullopt;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < 3; ++r) rows.push_back(e.reduced.row(r));
  PlaneP4 plane = PlaneP4::from_spanning(f, rows);
  if (!on_all(plane, members)) return std::nullopt;
  return plane;
}

LineClassification classify_line(const Pencil& pencil) {
  const PrimeField& f = pencil.field();
  LineClassification out{LineFamily::NonGeneric, rank3_locus(pencil), {}, {}, {}, {}};
  if (!is_squarefree(out.locus.gcd_form)) {
    out.reason = "rank-3 locus is not reduced";
    return out;
  }

  std::vector<Vec> stacked;
  for (std::size_t r = 0; r < 5; ++r) stacked.push_back(pencil.first().matrix().row(r));
  for (std::size_t r = 0; r < 5; ++r) stacked.push_back(pencil.second().matrix().row(r));
  auto common = rank_kernel(Matrix::from_rows(f, stacked));
  if (!common.kernel.empty()) {
    out.family = LineFamily::CommonVertex;
    out.common_vertex = normalize_projective(f, common.kernel[0]);
    return out;
  }

  out.common_plane = f.modulus() <= (1ULL << 10U) ? common_plane_by_enumeration(pencil)
                                                  : common_plane_from_vertices(pencil);
  if (out.common_plane) {
    out.family = LineFamily::CommonPlane;
    return out;
  }

  if (out.locus.distinct_count == 2) {
    if (out.locus.rational_points.size() != 2) {
      out.reason = "rank-3 points are not rational";
      return out;
    }
    for (const auto& pt : out.locus.rational_points) {
      QuadricForm q = pencil.member(pt.lambda, pt.mu);
      auto vertex = q.vertex();
      if (vertex.size() != 2) {
        out.reason = "member at a rank-3 point does not have rank 3";
        out.tangency.clear();
        return out;
      }
      // Any other member restricts to the vertex line up to a scalar.
      QuadricForm other = (pt.mu == 0) ? pencil.member(0, 1) : pencil.member(1, 0);
      BinaryForm r = restrict_to_line(other, vertex[0], vertex[1]);
      out.tangency.push_back({pt, vertex[0], vertex[1], r});
      if (!is_square_form(r)) {
        out.reason = "vertex line is not tangent to the complementary member";
        return out;
      }
    }
    out.family = LineFamily::Rank2Special;
    return out;
  }
  out.reason = "no family matches";
  return out;
}

PreimageResult preimage_analysis(const Pencil& pencil) {
  Rank3Locus locus = rank3_locus(pencil);
  if (!is_squarefree(locus.gcd_form)) throw Error(ErrorKind::NonGeneric, "rank-3 locus is not reduced");
  const int r = locus.distinct_count;
  if (r % 2 != 0)
    throw Error(ErrorKind::InternalInconsistency, "odd ramification " + std::to_string(r) + " for a double cover of P^1");
  if (r == 0) return {0, PreimageVerdict::SplitTwoLines, -1};
  return {r, PreimageVerdict::Irreducible, r / 2 - 1};
}

Pencil family1_normal_form(const PrimeField& field) {
  return Pencil(QuadricForm::from_terms(field, 5, {{0, 2, 1}, {1, 3, 1}}),
                QuadricForm::from_terms(field, 5, {{0, 3, -1}, {1, 4, -1}}));
}

Pencil family3_normal_form(const PrimeField& field) {
  return Pencil(QuadricForm::from_terms(field, 5, {{0, 0, 1}, {1, 2, 1}}),
                QuadricForm::from_terms(field, 5, {{2, 3, 1}, {4, 4, 1}}));
}

Pencil random_common_vertex_pencil(const PrimeField& field, Rng& rng) {
  for (;;) {
    std::array<Matrix, 2> m{Matrix(field, 5, 5), Matrix(field, 5, 5)};
    for (auto& x : m)
      for (std::size_t i = 1; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) x(i, j) = x(j, i) = rng.element(field);
    if (rank(m[0]) == 0 || rank(m[1]) == 0) continue;
    try {
      return Pencil(QuadricForm(m[0]), QuadricForm(m[1]));
    } catch (const Error&) {
    }
  }
}

Pencil random_conjugate(const Pencil& pencil, Rng& rng) {
  const PrimeField& f = pencil.field();
  return pencil.congruent(random_invertible(f, rng, 5)).rebased(random_invertible(f, rng, 2));
}

NormalFormReduction reduce_to_normal_form(const Pencil& pencil, Rng& rng, int max_attempts) {
  const PrimeField& f = pencil.field();
  LineClassification cls = classify_line(pencil);
  if (cls.family != LineFamily::CommonPlane)
    throw Error(ErrorKind::NotApplicable, "normal form reduction needs a common-plane pencil, got " +
                                              to_string(cls.family));
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Matrix change = attempt == 1 ? Matrix::identity(f, 2) : random_invertible(f, rng, 2);
    Matrix mix = attempt == 1 ? Matrix::identity(f, 2) : random_invertible(f, rng, 2);
    Pencil rebased = pencil.rebased(change);
    if (auto g = try_reduce(rebased, *cls.common_plane, mix))
      return {rebased, change, *g, *cls.common_plane, attempt};
  }
  throw Error(ErrorKind::NonGeneric, "no normal form after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace quadrint
