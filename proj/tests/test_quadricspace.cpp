#include <algorithm>
#include <set>

#include "doctest.h"
#include "quadrint/error.hpp"
#include "quadrint/rulings.hpp"
#include "quadrint/singularity.hpp"
#include "support.hpp"

using namespace quadrint;
using quadrint::testing::random_invertible;
using quadrint::testing::random_quadric;

namespace {

// All reduced-echelon 3 x 5 matrices over GF(p): every 2-plane of P^4.
template <typename F>
void for_each_plane(const PrimeField& f, F&& visit) {
  const Elem p = f.modulus();
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < 5; ++c)
      if (mask & (1U << c)) piv.push_back(c);
    // free positions: (row r, col c) with c > piv[r] and c not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = piv[r] + 1; c < 5; ++c)
        if (!(mask & (1U << c))) free.push_back({r, c});
    std::size_t total = 1;
    for (std::size_t k = 0; k < free.size(); ++k) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Vec> rows(3, Vec(5, 0));
      for (std::size_t r = 0; r < 3; ++r) rows[r][piv[r]] = 1;
      std::size_t x = code;
      for (auto [r, c] : free) {
        rows[r][c] = x % p;
        x /= p;
      }
      visit(rows);
    }
  }
}

}  // namespace

TEST_CASE("rank and vertex examples") {
  PrimeField f(101);
  auto q5 = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}, {4, 4, 1}});
  CHECK(q5.rank() == 5);
  CHECK(q5.vertex().empty());
  auto q3 = QuadricForm::from_terms(f, 5, {{0, 0, 1}, {1, 2, 1}});
  CHECK(q3.rank() == 3);
  auto v = q3.vertex();
  REQUIRE(v.size() == 2);
  for (const auto& x : v) CHECK((x[0] == 0 && x[1] == 0 && x[2] == 0));
  // x0^2 - x1^2 - x2^2 + z1 x3^2 + z2 x3 x4 + z3 x4^2 at (1, 2, 1)
  auto s = QuadricForm::from_terms(f, 5, {{0, 0, 1}, {1, 1, -1}, {2, 2, -1}, {3, 3, 1}, {3, 4, 2}, {4, 4, 1}});
  CHECK(s.rank() == 4);
}

TEST_CASE("serialization round trip") {
  PrimeField f(101);
  std::vector<std::int64_t> c{1, 2, 0, 0, -3, 4, 0, 0, 0, 5, 6, 0, 0, 7, -1};
  auto q = QuadricForm::from_coefficients(f, 5, c);
  auto back = q.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(back[k] == f.from_int(c[k]));
  CHECK(q.value(Vec{1, 1, 0, 0, 0}) == f.from_int(1 + 2 + 4));
}

TEST_CASE("restrictions") {
  PrimeField f(101);
  auto q = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}});
  std::vector<Vec> h{{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  CHECK(rank(restrict(q, h)) == 2);  // x2 x3 on {x0 = 0}: the x1 direction drops out
  auto q4 = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}, {4, 4, 1}});
  CHECK(rank(restrict(q4, h)) == 3);
  CHECK_THROWS_AS(restrict(q, {{1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}}), Error);

  auto t = QuadricForm::from_terms(f, 5, {{2, 3, 1}, {4, 4, 1}});
  auto r = restrict_to_line(t, Vec{0, 0, 0, 1, 0}, Vec{0, 0, 0, 0, 1});
  CHECK(r == BinaryForm::monomial(f, 0, 2));  // x4^2 in the coordinates of the line

  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    auto a = random_quadric(f, rng);
    std::vector<Vec> sub;
    for (int j = 0; j < 3; ++j) sub.push_back(testing::random_vector(f, rng, 5));
    if (rank(Matrix::from_rows(f, sub)) < 3) continue;
    CHECK(rank(restrict(a, sub)) <= a.rank());
  }
}

TEST_CASE("congruence preserves rank") {
  PrimeField f(101);
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    Matrix low = testing::random_matrix(f, rng, 5, 2);
    QuadricForm q(low * low.transpose() + Matrix::identity(f, 5).scaled(k % 2));
    CHECK(q.congruent(random_invertible(f, rng, 5)).rank() == q.rank());
  }
}

TEST_CASE("pencils in Z") {
  PrimeField f(101);
  Rng rng(25);
  auto a = random_quadric(f, rng), b = random_quadric(f, rng);
  Pencil generic(a, b);
  // Oracle: det at six parameters; one nonzero value suffices.
  bool nonzero = false;
  for (Elem t = 0; t < 6; ++t) nonzero = nonzero || determinant(generic.member(1, t).matrix()) != 0;
  CHECK(nonzero);
  CHECK(pencil_in_Z(generic) == !nonzero);
  CHECK_THROWS_AS(rank3_locus(generic), Error);

  Pencil rank2(QuadricForm::from_terms(f, 5, {{0, 0, 1}}), QuadricForm::from_terms(f, 5, {{1, 1, 1}}));
  CHECK(pencil_in_Z(rank2));
  CHECK_THROWS_AS(rank3_locus(rank2), Error);
  CHECK_THROWS_AS(Pencil(a, a.scaled(3)), Error);
}

TEST_CASE("det form agrees with pointwise determinants") {
  PrimeField f(101);
  Rng rng(27);
  Pencil p(random_quadric(f, rng), random_quadric(f, rng));
  auto d = p.det_form();
  for (Elem t = 0; t < 10; ++t) CHECK(d.eval(1, t) == determinant(p.member(1, t).matrix()));
}

TEST_CASE("rank3 locus examples") {
  PrimeField f(101);
  Pencil fam1(QuadricForm::from_terms(f, 5, {{0, 2, 1}, {1, 3, 1}}), QuadricForm::from_terms(f, 5, {{0, 3, -1}, {1, 4, -1}}));
  CHECK(pencil_in_Z(fam1));
  CHECK(rank3_locus(fam1).distinct_count == 0);

  Pencil fam3(QuadricForm::from_terms(f, 5, {{0, 0, 1}, {1, 2, 1}}), QuadricForm::from_terms(f, 5, {{2, 3, 1}, {4, 4, 1}}));
  auto l3 = rank3_locus(fam3);
  CHECK(l3.distinct_count == 2);
  REQUIRE(l3.rational_points.size() == 2);
  CHECK(l3.rational_points[0] == ProjectiveRoot{0, 1, 1});
  CHECK(l3.rational_points[1] == ProjectiveRoot{1, 0, 1});

  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix m1(f, 5, 5), m2(f, 5, 5);
    for (std::size_t i = 1; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j) {
        m1(i, j) = m1(j, i) = rng.element(f);
        m2(i, j) = m2(j, i) = rng.element(f);
      }
    Pencil fam2{QuadricForm(m1), QuadricForm(m2)};
    auto l2 = rank3_locus(fam2);
    // Oracle: the 4 x 4 determinant of the x1..x4 block.
    BinaryForm quartic = Pencil(QuadricForm(m1.block(1, 1, 4, 4)), QuadricForm(m2.block(1, 1, 4, 4))).det_form();
    CHECK(l2.gcd_form == quartic.monic());
    CHECK(l2.distinct_count == distinct_root_count(quartic));
    // Basis change of the pencil keeps the count.
    CHECK(rank3_locus(fam2.rebased(random_invertible(f, rng, 2))).distinct_count == l2.distinct_count);
  }
}

TEST_CASE("a1 check on the standard slice") {
  PrimeField f(32003);
  auto slice = standard_a1_slice(f);
  CHECK(is_transversal(slice));
  auto r = a1_transversal_check(slice);
  CHECK(r.quadratic_rank == 3);
  CHECK(r.pass);
  // Proportional to z2^2 - 4 z1 z3: Gram diag(0, 1, 0) with (0,2) entry -2, up to scale.
  const Elem s = r.quadratic_part(1, 1);
  REQUIRE(s != 0);
  CHECK(r.quadratic_part(0, 2) == f.mul(s, f.from_int(-2)));
  CHECK(r.quadratic_part(0, 0) == 0);
  CHECK(r.quadratic_part(2, 2) == 0);
  CHECK(r.quadratic_part(0, 1) == 0);
  CHECK(r.quadratic_part(1, 2) == 0);
}

TEST_CASE("a1 check on random rank-3 quadrics agrees with interpolated Taylor coefficients") {
  PrimeField f(32003);
  Rng rng(31);
  // Quadratic monomials of (t1, t2, t3) in the order 11, 12, 13, 22, 23, 33.
  const std::size_t idx[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  for (int trial = 0; trial < 25; ++trial) {
    Rng sub = rng.split(static_cast<std::uint64_t>(trial));
    auto slice = random_a1_slice(f, sub);
    CHECK(slice.base.rank() == 3);
    auto r = a1_transversal_check(slice);
    CHECK(r.quadratic_rank == 3);
    CHECK(r.pass);

    // Oracle: on each grid direction t, interpolate s -> det(B + s sum t_k D_k)
    // and read off orders 0, 1, 2; then solve for the 10 Taylor coefficients.
    Matrix sys(f, 27, 10);
    Vec rhs(27);
    std::size_t row = 0;
    for (Elem a = 0; a < 3; ++a)
      for (Elem b = 0; b < 3; ++b)
        for (Elem c = 0; c < 3; ++c) {
          Vec t{a + 1, b + 2, c == 2 ? f.from_int(-1) : c};
          Matrix dir = slice.directions[0].scaled(t[0]) + slice.directions[1].scaled(t[1]) + slice.directions[2].scaled(t[2]);
          // Vandermonde on s = 0..5.
          Matrix v(f, 6, 6);
          Vec vals(6);
          for (Elem s = 0; s < 6; ++s) {
            Elem pw = 1;
            for (std::size_t k = 0; k < 6; ++k) {
              v(s, k) = pw;
              pw = f.mul(pw, s);
            }
            vals[s] = determinant(slice.base.matrix() + dir.scaled(s));
          }
          Vec coeffs = inverse(v).apply(vals);
          // Sum of all orders at s = 1 would mix degrees; use order 2 only, plus checks on orders 0, 1.
          CHECK(coeffs[0] == 0);
          CHECK(coeffs[1] == 0);
          sys(row, 0) = 1;
          for (std::size_t m = 0; m < 6; ++m) sys(row, 4 + m) = f.mul(t[idx[m][0]], t[idx[m][1]]);
          rhs[row] = coeffs[2];
          ++row;
        }
    // Columns 1..3 (linear part) stay zero; solve the consistent system by elimination.
    Matrix aug(f, 27, 11);
    for (std::size_t i = 0; i < 27; ++i) {
      for (std::size_t j = 0; j < 10; ++j) aug(i, j) = sys(i, j);
      aug(i, 10) = rhs[i];
    }
    Echelon e = rref(aug);
    Vec taylor(10, 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      REQUIRE(e.pivots[i] < 10);
      taylor[e.pivots[i]] = e.reduced(i, 10);
    }
    CHECK(taylor[0] == 0);
    for (std::size_t m = 0; m < 6; ++m) {
      auto [i, j] = std::pair{idx[m][0], idx[m][1]};
      const Elem expected = i == j ? r.quadratic_part(i, i) : f.add(r.quadratic_part(i, j), r.quadratic_part(j, i));
      CHECK(taylor[4 + m] == expected);
    }
  }
}

TEST_CASE("a1 check rejects rank-4 bases") {
  PrimeField f(101);
  auto slice = standard_a1_slice(f);
  slice.base = QuadricForm::from_terms(f, 5, {{0, 0, 1}, {1, 1, -1}, {2, 2, -1}, {3, 3, 1}});
  CHECK_THROWS_AS(a1_transversal_check(slice), Error);
}

TEST_CASE("local colength") {
  PrimeField f(101);
  auto t1 = MultiPoly::variable(f, 2, 0), t2 = MultiPoly::variable(f, 2, 1);
  CHECK(local_colength({t1, t2}) == 1);
  // Oracle: t2 = t1^2 / 4 eliminates t2, leaving (t1^4): staircase {1, t1, t1^2, t1^3}.
  CHECK(local_colength({t1 * t1 - t2.scaled(4), t2 * t2}) == 4);
  CHECK(local_colength({t1 * t1, t2 * t2}) == 4);
  auto m = miniversal_length2_check(f);
  CHECK(m.colength == 2);
  CHECK(m.pass);
  CHECK_THROWS_AS(local_colength({t1 * t2}), Error);
}

TEST_CASE("planes on x0 x1 + x2 x3 over GF(7) match exhaustive enumeration") {
  PrimeField f(7);
  auto q = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}});
  std::vector<PlaneP4> oracle;
  std::size_t total = 0;
  for_each_plane(f, [&](const std::vector<Vec>& rows) {
    ++total;
    PlaneP4 p = PlaneP4::from_spanning(f, rows);
    if (p.lies_on(q)) oracle.push_back(p);
  });
  CHECK(total == 140050);
  REQUIRE(oracle.size() == 16);
  // Partition the oracle list by meeting parity.
  std::vector<PlaneP4> a{oracle[0]}, b;
  for (std::size_t k = 1; k < oracle.size(); ++k)
    (intersection_dimension(oracle[0], oracle[k]) % 2 == 1 ? a : b).push_back(oracle[k]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  auto r = planes_on(q);
  CHECK(r.classes[0].size() == 8);
  CHECK(r.classes[1].size() == 8);
  std::set<std::vector<PlaneP4>> got{r.classes[0], r.classes[1]};
  CHECK(got == std::set<std::vector<PlaneP4>>{a, b});

  auto eq = [&](Vec e1, Vec e2) { return PlaneP4::from_equations(f, e1, e2); };
  auto p02 = eq({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0});
  auto p13 = eq({0, 1, 0, 0, 0}, {0, 0, 0, 1, 0});
  auto p03 = eq({1, 0, 0, 0, 0}, {0, 0, 0, 1, 0});
  CHECK(p02.lies_on(q));
  CHECK(p13.lies_on(q));
  CHECK(same_ruling(q, p02, p13));
  CHECK_FALSE(same_ruling(q, p02, p03));
  CHECK(same_ruling(q, p02, p02));
  // Agreement with the oracle partition.
  auto in_a = [&](const PlaneP4& p) { return std::find(a.begin(), a.end(), p) != a.end(); };
  CHECK(in_a(p02) == in_a(p13));
  CHECK(in_a(p02) != in_a(p03));
}

TEST_CASE("non-split and wrong-rank quadrics") {
  PrimeField f(7);
  // x0^2 + x1^2 is anisotropic since -1 is a non-residue mod 7.
  auto ns = QuadricForm::from_terms(f, 5, {{0, 0, 1}, {1, 1, 1}, {2, 3, 1}});
  CHECK(ns.rank() == 4);
  CHECK_THROWS_AS(planes_on(ns), Error);
  try {
    planes_on(ns);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSplitQuadric);
  }
  auto r5 = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}, {4, 4, 1}});
  CHECK_THROWS_AS(planes_on(r5), Error);
}

TEST_CASE("ruling classes on random split rank-4 quadrics") {
  PrimeField f(7);
  Rng rng(37);
  const auto base = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}});
  for (int trial = 0; trial < 5; ++trial) {
    auto q = base.congruent(random_invertible(f, rng, 5));
    auto r = planes_on(q);
    CHECK(r.classes[0].size() == 8);
    CHECK(r.classes[1].size() == 8);
    for (int c = 0; c < 2; ++c)
      for (const auto& a : r.classes[c]) {
        CHECK(a.lies_on(q));
        for (const auto& b : r.classes[c]) CHECK(same_ruling(q, a, b));
        for (const auto& b : r.classes[1 - c]) CHECK_FALSE(same_ruling(q, a, b));
      }
  }
}

TEST_CASE("quadrics through a plane") {
  PrimeField f(101);
  Rng rng(41);
  auto plane = PlaneP4::from_equations(f, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0});
  auto basis = quadrics_through_plane(f, plane);
  CHECK(basis.size() == 9);
  for (const auto& q : basis) {
    CHECK(q.rank() <= 4);
    CHECK(plane.lies_on(q));
    CHECK(q.matrix().block(2, 2, 3, 3).is_zero());
  }
  for (int k = 0; k < 10; ++k) {
    std::vector<Vec> span;
    for (int j = 0; j < 3; ++j) span.push_back(testing::random_vector(f, rng, 5));
    if (rank(Matrix::from_rows(f, span)) < 3) continue;
    auto p = PlaneP4::from_spanning(f, span);
    auto b = quadrics_through_plane(f, p);
    CHECK(b.size() == 9);
    Matrix coeffs(f, 9, 15);
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(b[i].rank() <= 4);
      CHECK(p.lies_on(b[i]));
      auto c = b[i].coefficients();
      for (std::size_t j = 0; j < 15; ++j) coeffs(i, j) = c[j];
    }
    CHECK(rank(coeffs) == 9);
  }
}

TEST_CASE("W points compare by ruling") {
  PrimeField f(7);
  auto q = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}});
  auto eq = [&](Vec e1, Vec e2) { return PlaneP4::from_equations(f, e1, e2); };
  WPoint a(q, eq({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}));
  WPoint b(q, eq({0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}));
  WPoint c(q, eq({1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}));
  CHECK(a == b);
  CHECK_FALSE(a == c);
}
