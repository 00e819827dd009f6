#include <algorithm>
#include <set>

#include "doctest.h"
#include "quadrint/chow.hpp"
#include "quadrint/lines.hpp"
#include "quadrint/secants.hpp"
#include "support.hpp"

using namespace quadrint;

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const Instance& small_instance() {
  static const Instance inst = gen_instance(1, PrimeField(101));
  return inst;
}

const Instance& large_instance() {
  static const Instance inst = gen_instance(1, PrimeField(32003));
  return inst;
}

}  // namespace

TEST_CASE("instance generation is deterministic and symmetric") {
  PrimeField f(101);
  auto a = gen_instance(1, f), b = gen_instance(1, f);
  CHECK(a.tensor() == b.tensor());
  CHECK(gen_instance(2, f).tensor() != a.tensor());
  for (std::size_t j = 0; j < 6; ++j) CHECK(a.tensor()[2][3][j] == a.tensor()[3][2][j]);
  Rng rng(3);
  bool nonzero = false;
  for (int k = 0; k < 5; ++k) {
    auto x = testing::random_vector(f, rng, 6);
    CHECK(a.M(x).is_symmetric());
    nonzero = nonzero || determinant(a.M(x)) != 0;
  }
  CHECK(nonzero);
}

TEST_CASE("broken symmetry and degenerate nets are rejected") {
  PrimeField f(101);
  auto t = small_instance().tensor();
  t[0][1][2] = (t[0][1][2] + 1) % 101;
  try {
    Instance(f, 1, t);
    FAIL("asymmetric tensor accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameter);
  }
  Instance::Tensor zero{};
  try {
    Instance(f, 1, zero);
    FAIL("degenerate net accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInstance);
  }
}

TEST_CASE("instance JSON round trip and validation") {
  const auto& inst = small_instance();
  auto back = Instance::from_json(inst.to_json());
  CHECK(back.tensor() == inst.tensor());
  CHECK(back.seed() == inst.seed());
  CHECK(back.field().modulus() == 101);
  CHECK_THROWS_AS(Instance::from_json("{"), Error);
  CHECK_THROWS_AS(Instance::from_json(R"({"p": 101, "seed": 1})"), Error);
  CHECK_THROWS_AS(Instance::from_json(R"({"p": 2, "seed": 1, "tensor": []})"), Error);
  auto asym = inst.tensor();
  asym[0][1][0] = (asym[0][1][0] + 1) % 101;
  std::string text = R"({"p": 101, "seed": 1, "tensor": [)";
  for (std::size_t l = 0; l < 5; ++l) {
    text += l ? ",[" : "[";
    for (std::size_t i = 0; i < 5; ++i) {
      text += i ? ",[" : "[";
      for (std::size_t j = 0; j < 6; ++j) text += (j ? "," : "") + std::to_string(asym[l][i][j]);
      text += "]";
    }
    text += "]";
  }
  text += "]}";
  try {
    Instance::from_json(text);
    FAIL("asymmetric tensor loaded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameter);
  }
}

TEST_CASE("duality identity") {
  const auto& inst = small_instance();
  Rng rng(5);
  CHECK(duality_identity_check(inst, rng, 100));
  // Kernels both ways on 20 samples.
  const PrimeField& f = inst.field();
  auto ys = sample_S_points(inst, 5, rng);
  for (const auto& y : ys) {
    auto sp = pencil_at_S_point(inst, y);
    for (const auto& x : {sp.x1, sp.x2}) {
      CHECK(testing::is_zero_vector(inst.M(x).apply(y)));
      CHECK(testing::is_zero_vector(inst.N(y).transpose().apply(x)));
    }
  }
  for (int k = 0; k < 20; ++k) {
    auto x = testing::random_vector(f, rng, 6);
    auto y = testing::random_vector(f, rng, 5);
    CHECK(testing::is_zero_vector(inst.M(x).apply(y)) == testing::is_zero_vector(inst.N(y).transpose().apply(x)));
  }
}

TEST_CASE("S-point sampling") {
  const auto& inst = small_instance();
  Rng rng(7);
  CHECK(sample_S_points(inst, 0, rng).empty());
  auto ys = sample_S_points(inst, 20, rng);
  CHECK(ys.size() == 20);
  CHECK(std::is_sorted(ys.begin(), ys.end()));
  for (const auto& y : ys) CHECK(rank(inst.N(y)) == 4);
  auto viaEigen = sample_S_points(inst, 5, rng, SamplingRoute::PlaneEigenvalues);
  for (const auto& y : viaEigen) CHECK(rank(inst.N(y)) == 4);
  try {
    sample_S_points(inst, 1000, rng, SamplingRoute::PlaneEnumeration, 2);
    FAIL("budget not enforced");
  } catch (const SamplingBudgetExceeded& e) {
    CHECK(e.partial().size() < 1000);
  }
}

TEST_CASE("average number of S-points on a random plane") {
  const auto& inst = small_instance();
  Rng rng(9);
  std::size_t total = 0;
  const int planes = 200;
  for (int k = 0; k < planes; ++k) {
    std::vector<Vec> plane;
    do {
      plane.clear();
      for (int j = 0; j < 3; ++j) plane.push_back(testing::random_vector(inst.field(), rng, 5));
    } while (rank(Matrix::from_rows(inst.field(), plane)) != 3);
    total += S_points_on_plane(inst, plane).size();
  }
  const double mean = static_cast<double>(total) / planes;
  MESSAGE("mean rational S-points per plane: " << mean);
  CHECK(mean > 0.6);
  CHECK(mean < 1.5);
}

TEST_CASE("eigenvalue route agrees with enumeration on the same plane") {
  const auto& inst = small_instance();
  const PrimeField& f = inst.field();
  Rng rng(10);
  int agree = 0;
  const int planes = 60;
  for (int k = 0; k < planes; ++k) {
    std::vector<Vec> plane;
    do {
      plane.clear();
      for (int j = 0; j < 3; ++j) plane.push_back(testing::random_vector(f, rng, 5));
    } while (rank(Matrix::from_rows(f, plane)) != 3);
    std::set<Vec> enumerated, algebraic;
    for (const auto& y : S_points_on_plane(inst, plane)) enumerated.insert(normalize_projective(f, y));
    for (const auto& y : S_points_on_plane_algebraic(inst, plane)) algebraic.insert(normalize_projective(f, y));
    for (const auto& y : algebraic) CHECK(enumerated.count(y) == 1);
    agree += enumerated == algebraic;
  }
  CHECK(agree >= planes * 9 / 10);
}

TEST_CASE("pencils at S-points are common-vertex lines") {
  const auto& inst = small_instance();
  Rng rng(11);
  for (const auto& y : sample_S_points(inst, 5, rng)) {
    auto sp = pencil_at_S_point(inst, y);
    auto c = classify_line(sp.pencil);
    CHECK(c.family == LineFamily::CommonVertex);
    REQUIRE(c.common_vertex);
    CHECK(*c.common_vertex == normalize_projective(inst.field(), y));
    auto pre = preimage_analysis(sp.pencil);
    CHECK(pre.ramification == c.locus.distinct_count);
    if (pre.ramification == 4) CHECK(pre.genus == 1);
    CHECK(reduced_quartic(sp).degree() == 4);
  }
  Vec off{1, 0, 0, 0, 0};
  if (rank(inst.N(off)) == 5) CHECK_THROWS_AS(pencil_at_S_point(inst, off), Error);
}

TEST_CASE("rank-3 sampling and 5-secant certificates") {
  const auto& inst = large_instance();
  Rng rng(13);
  auto s = sample_rank3_points(inst, 20, rng);
  REQUIRE(s.points.size() == 20);
  MESSAGE("pencils tried " << s.pencils_tried << ", productive " << s.pencils_with_roots);
  std::set<Vec> lines;
  for (const auto& p : s.points) {
    CHECK(rank(inst.M(p.x)) == 3);
    CHECK(inst.det_M().eval(p.x) == 0);
    CHECK(rank_kernel(inst.M(p.x)).kernel.size() == 2);
    auto c = five_secant_certificate(inst, p.x, rng, p.s_point);
    CHECK(c.valid);
    CHECK(c.gcd_degree == 5);
    CHECK(c.proportional);
    REQUIRE(c.hint_on_line.has_value());
    CHECK(*c.hint_on_line);
    for (const auto& m : c.minors)
      if (!m.is_zero()) CHECK(divides(c.gcd, m));
    // Oracle for the factor profile: count roots over GF(p^k) as deg gcd(g, t^(p^k) - t).
    int sum = 0;
    for (int d : c.factor_profile) sum += d;
    CHECK(sum == 5);
    CHECK(static_cast<int>(c.factor_profile.size()) >= 1);
    lines.insert(c.line_pluecker);
  }
  CHECK(lines.size() >= 10);
}

TEST_CASE("certificate rejects rank-4 input") {
  const auto& inst = large_instance();
  Rng rng(17);
  auto ys = sample_S_points(inst, 1, rng);
  auto sp = pencil_at_S_point(inst, ys[0]);
  Vec x = sp.x1;
  REQUIRE(rank(inst.M(x)) == 4);
  try {
    five_secant_certificate(inst, x, rng);
    FAIL("rank-4 input accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRankThree);
  }
}

TEST_CASE("Hilbert function basics") {
  PrimeField f(101);
  std::vector<MultiPoly> none;
  auto z = hilbert_profile(none, 3, 2, 8);
  for (std::size_t k = 0; k < z.degrees.size(); ++k) CHECK(z.values[k] == choose(z.degrees[k] + 2, 2));
  CHECK(z.fit.dimension == 2);
  CHECK(z.fit.degree == 1);
  // A conic in P^2: HF = 2d + 1.
  auto x = MultiPoly::variable(f, 3, 0), y = MultiPoly::variable(f, 3, 1), w = MultiPoly::variable(f, 3, 2);
  auto conic = hilbert_profile({x * y - w * w}, 3, 1, 6);
  CHECK(conic.fit.dimension == 1);
  CHECK(conic.fit.degree == 2);
  // Three points: HF = 3 from degree 2 on.
  auto pts = hilbert_profile({x * y, y * w, x * w}, 3, 1, 6);
  CHECK(pts.fit.dimension == 0);
  CHECK(pts.fit.degree == 3);
  // Whole ring: empty scheme.
  auto empty = hilbert_profile({x, y, w}, 3, 1, 5);
  CHECK(empty.fit.dimension == -1);
  CHECK(hilbert_profile({x * y * w}, 3, 0, 1).extended);
  CHECK_FALSE(fit_hilbert({0, 1}, {1, 3}).has_value());
  CHECK_FALSE(fit_hilbert({0, 1, 2, 3}, {1, 2, 4, 8}).has_value());
}

TEST_CASE("plane section of S has 15 points") {
  const auto& inst = small_instance();
  Rng rng(19);
  auto ps = plane_section_profile(inst, rng);
  for (std::size_t k = 0; k < ps.profile.degrees.size(); ++k) {
    const std::int64_t d = ps.profile.degrees[k];
    // Eagon-Northcott resolution of six quintics in three variables.
    CHECK(ps.profile.values[k] == choose(d + 2, 2) - 6 * choose(d - 3, 2) + 5 * choose(d - 4, 2));
    CHECK(ps.profile.values[k] == 15);
  }
  CHECK(ps.profile.fit.dimension == 0);
  CHECK(ps.profile.fit.degree == 15);
}

TEST_CASE("rank-3 locus of the net is a surface") {
  const auto& inst = large_instance();
  auto prof = rank3_locus_profile(inst);
  for (std::size_t k = 0; k < prof.degrees.size(); ++k) {
    const std::int64_t d = prof.degrees[k];
    // Resolution 1 - 15 t^4 + 24 t^5 - 10 t^6 of the symmetric 4 x 4 minors.
    CHECK(prof.values[k] == choose(d + 5, 5) - 15 * choose(d + 1, 5) + 24 * choose(d, 5) - 10 * choose(d - 1, 5));
  }
  CHECK(prof.fit.dimension == 2);
  MESSAGE("degree of the rank <= 3 locus: " << prof.fit.degree);
}

TEST_CASE("S is smooth at sampled points") {
  const auto& inst = small_instance();
  Rng rng(23);
  auto ys = sample_S_points(inst, 20, rng);
  auto res = s_smoothness_spotcheck(inst, ys);
  REQUIRE(res.size() == 20);
  for (const auto& r : res) {
    CHECK(r.rank_N == 4);
    CHECK(r.jacobian_rank == 2);
    CHECK(r.status == SmoothnessStatus::Smooth);
  }
  Vec off = testing::random_vector(inst.field(), rng, 5);
  if (rank(inst.N(off)) == 5) CHECK_THROWS_AS(s_smoothness_spotcheck(inst, {off}), Error);
}

TEST_CASE("vertex divisor on a hyperplane") {
  const auto& inst = small_instance();
  Rng rng(29);
  auto d = dh_divisor_check(inst, Vec{1, 2, 3, 4, 5}, rng, 5);
  CHECK(d.quartic_degree == 4);
  CHECK(d.samples_checked >= 1);
  CHECK(d.samples_vanishing == d.samples_checked);
  CHECK(d.implied_deg_DH == 10);
  CHECK(d.chow_deg_DH == 10);
  CHECK(d.pass);
}
