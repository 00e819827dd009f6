#include "quadrint/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "quadrint/chow.hpp"
#include "quadrint/error.hpp"
#include "quadrint/lines.hpp"
#include "quadrint/rng.hpp"
#include "quadrint/rulings.hpp"
#include "quadrint/sampling.hpp"
#include "quadrint/secants.hpp"
#include "quadrint/sections.hpp"
#include "quadrint/singularity.hpp"

namespace quadrint {

using nlohmann::json;

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names{"chow",  "a1",       "miniversal", "rulings", "lines",
                                              "sigma", "instance", "hilbert",    "secants"};
  return names;
}

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorKind::Config, what); }

void check_prime(const char* key, std::uint64_t p) {
  if (p < 3 || !is_prime(p) || p >= (std::uint64_t{1} << 63))
    config_error(std::string(key) + " must be an odd prime below 2^63, got " + std::to_string(p));
}

}  // namespace

void validate(const RunConfig& c) {
  check_prime("enumeration_prime", c.enumeration_prime);
  check_prime("certificate_prime", c.certificate_prime);
  check_prime("ruling_prime", c.ruling_prime);
  if (c.ruling_prime > 1024) config_error("ruling_prime must be at most 1024");
  const TrialCounts& t = c.trials;
  for (int n : {t.a1_slices, t.conjugates, t.ruling_quadrics, t.duality_pairs, t.smoothness_points, t.secant_points,
                t.torsion_conjugates, t.divisor_samples})
    if (n < 1) config_error("trial counts must be at least 1");
  const HilbertRanges& h = c.hilbert;
  if (h.plane_min < 0 || h.plane_max < h.plane_min + 2 || h.locus_min < 0 || h.locus_max < h.locus_min + 2)
    config_error("hilbert ranges need min >= 0 and at least three degrees");
  for (const auto& s : c.sections)
    if (std::find(section_names().begin(), section_names().end(), s) == section_names().end())
      config_error("unknown section '" + s + "'");
}

namespace {

template <class T>
T take(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    config_error(std::string("wrong type for '") + key + "'");
  }
}

void read_int(const json& obj, const char* key, int& out) {
  if (obj.contains(key)) out = take<int>(obj.at(key), key);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
  if (!obj.is_object()) config_error(where + " must be an object");
  for (const auto& item : obj.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return item.key() == k; }))
      config_error("unknown key '" + item.key() + "' in " + where);
}

}  // namespace

RunConfig config_from_json(const std::string& text, RunConfig c) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    config_error(std::string("malformed config: ") + e.what());
  }
  reject_unknown(j,
                 {"seed", "prime", "enumeration_prime", "certificate_prime", "ruling_prime", "trials", "hilbert",
                  "sections", "timings"},
                 "config");
  if (j.contains("seed")) c.seed = take<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("prime")) c.enumeration_prime = c.certificate_prime = take<std::uint64_t>(j.at("prime"), "prime");
  if (j.contains("enumeration_prime")) c.enumeration_prime = take<std::uint64_t>(j.at("enumeration_prime"), "enumeration_prime");
  if (j.contains("certificate_prime")) c.certificate_prime = take<std::uint64_t>(j.at("certificate_prime"), "certificate_prime");
  if (j.contains("ruling_prime")) c.ruling_prime = take<std::uint64_t>(j.at("ruling_prime"), "ruling_prime");
  if (j.contains("trials")) {
    const json& t = j.at("trials");
    reject_unknown(t,
                   {"a1_slices", "conjugates", "ruling_quadrics", "duality_pairs", "smoothness_points",
                    "secant_points", "torsion_conjugates", "divisor_samples"},
                   "trials");
    read_int(t, "a1_slices", c.trials.a1_slices);
    read_int(t, "conjugates", c.trials.conjugates);
    read_int(t, "ruling_quadrics", c.trials.ruling_quadrics);
    read_int(t, "duality_pairs", c.trials.duality_pairs);
    read_int(t, "smoothness_points", c.trials.smoothness_points);
    read_int(t, "secant_points", c.trials.secant_points);
    read_int(t, "torsion_conjugates", c.trials.torsion_conjugates);
    read_int(t, "divisor_samples", c.trials.divisor_samples);
  }
  if (j.contains("hilbert")) {
    const json& h = j.at("hilbert");
    reject_unknown(h, {"plane_min", "plane_max", "locus_min", "locus_max"}, "hilbert");
    read_int(h, "plane_min", c.hilbert.plane_min);
    read_int(h, "plane_max", c.hilbert.plane_max);
    read_int(h, "locus_min", c.hilbert.locus_min);
    read_int(h, "locus_max", c.hilbert.locus_max);
  }
  if (j.contains("sections")) c.sections = take<std::vector<std::string>>(j.at("sections"), "sections");
  if (j.contains("timings")) c.timings = take<bool>(j.at("timings"), "timings");
  return c;
}

namespace {

json config_json(const RunConfig& c) {
  const TrialCounts& t = c.trials;
  const HilbertRanges& h = c.hilbert;
  return json{{"seed", c.seed},
              {"enumeration_prime", c.enumeration_prime},
              {"certificate_prime", c.certificate_prime},
              {"ruling_prime", c.ruling_prime},
              {"trials",
               {{"a1_slices", t.a1_slices},
                {"conjugates", t.conjugates},
                {"ruling_quadrics", t.ruling_quadrics},
                {"duality_pairs", t.duality_pairs},
                {"smoothness_points", t.smoothness_points},
                {"secant_points", t.secant_points},
                {"torsion_conjugates", t.torsion_conjugates},
                {"divisor_samples", t.divisor_samples}}},
              {"hilbert",
               {{"plane_min", h.plane_min},
                {"plane_max", h.plane_max},
                {"locus_min", h.locus_min},
                {"locus_max", h.locus_max}}},
              {"sections", c.sections},
              {"timings", c.timings}};
}

}  // namespace

std::string config_to_json(const RunConfig& config) { return config_json(config).dump(2) + "\n"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
    case Verdict::ExpectedFail: return "expected-fail";
    case Verdict::UnexpectedPass: return "unexpected-pass";
  }
  return "?";
}

bool counts_as_pass(Verdict v) { return v == Verdict::Pass || v == Verdict::Info || v == Verdict::ExpectedFail; }

namespace {

struct Outcome {
  std::string observed;
  bool ok;
};

enum class RowKind { Check, Negative, Info };

class Section {
 public:
  Section(std::string name, std::vector<CheckRow>& rows) : name_(std::move(name)), rows_(rows) {}

  void check(const std::string& name, const std::string& claim, const std::string& expected,
             const std::function<Outcome()>& body) {
    run(RowKind::Check, name, claim, expected, body);
  }
  /// `body` reports ok = true when the tampering was detected.
  void negative(const std::string& name, const std::string& claim, const std::string& expected,
                const std::function<Outcome()>& body) {
    run(RowKind::Negative, name, claim, expected, body);
  }
  void info(const std::string& name, const std::string& claim, const std::function<Outcome()>& body) {
    run(RowKind::Info, name, claim, "informational", body);
  }

 private:
  void run(RowKind kind, const std::string& name, const std::string& claim, const std::string& expected,
           const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckRow row{name_, name, claim, expected, {}, Verdict::Fail, 0};
    try {
      Outcome o = body();
      row.observed = std::move(o.observed);
      switch (kind) {
        case RowKind::Check: row.verdict = o.ok ? Verdict::Pass : Verdict::Fail; break;
        case RowKind::Negative: row.verdict = o.ok ? Verdict::ExpectedFail : Verdict::UnexpectedPass; break;
        case RowKind::Info: row.verdict = Verdict::Info; break;
      }
    } catch (const Error& e) {
      row.observed = e.what();
      row.verdict = Verdict::Fail;
    }
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    row.runtime_ms = std::round(dt.count() * 1000.0) / 1000.0;
    rows_.push_back(std::move(row));
  }

  std::string name_;
  std::vector<CheckRow>& rows_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

template <class... T>
std::string tuple_str(T... v) {
  std::string s = "(";
  bool first = true;
  ((s += (first ? "" : ", ") + std::to_string(v), first = false), ...);
  return s + ")";
}

std::string ratio(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

Matrix random_invertible_matrix(const PrimeField& f, Rng& rng, std::size_t n) {
  for (;;) {
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.element(f);
    if (determinant(g) != 0) return g;
  }
}

void chow_section(Section& s) {
  s.check("deg_R", "degree of the branch hypersurface R in P^4", "18", [] {
    auto n = intersection_numbers();
    return Outcome{str(n.deg_R), n.deg_R == 18};
  });
  s.check("deg_S", "degree of the determinantal surface S", "15", [] {
    auto n = intersection_numbers();
    return Outcome{str(n.deg_S), n.deg_S == 15};
  });
  s.check("E4_E5_pairing", "pairing of the exceptional divisors is 4 deg S", "60 = 4*15", [] {
    auto n = intersection_numbers();
    const bool four = n.mult_S_in_Y_x4 == 4 * n.deg_S;
    return Outcome{str(n.mult_S_in_Y_x4) + (four ? " = 4*" : " != 4*") + str(n.deg_S), four && n.mult_S_in_Y_x4 == 60};
  });
  s.check("deg_DH", "degree of the divisor of quadrics with vertex on a hyperplane", "10", [] {
    auto n = intersection_numbers();
    return Outcome{str(n.deg_DH), n.deg_DH == 10};
  });
  s.negative("tampered_E5_class", "deg R computed from the E5 class (-1,2)", "!= 18", [] {
    const auto d = branch_degree(Bidegree{-1, 2});
    return Outcome{str(d), d != 18};
  });
}

void a1_section(Section& s, const RunConfig& c, const Rng& rng) {
  const PrimeField f(c.certificate_prime);
  s.check("standard_slice", "order-2 part of det on the standard transversal slice has rank 3", "rank 3", [&] {
    auto r = a1_transversal_check(standard_a1_slice(f));
    return Outcome{"rank " + str(static_cast<std::int64_t>(r.quadratic_rank)), r.pass && r.quadratic_rank == 3};
  });
  const auto n = static_cast<std::size_t>(c.trials.a1_slices);
  s.check("random_slices", "rank-3 quadrics are transversal A1 points of the rank <= 4 locus",
          ratio(n, n) + " rank 3", [&] {
            std::size_t good = 0;
            for (std::size_t t = 0; t < n; ++t) {
              Rng sub = rng.split(t);
              auto r = a1_transversal_check(random_a1_slice(f, sub));
              good += r.pass && r.quadratic_rank == 3;
            }
            return Outcome{ratio(good, n) + " rank 3", good == n};
          });
}

void miniversal_section(Section& s, const RunConfig& c) {
  const PrimeField f(c.certificate_prime);
  s.check("colength", "rank <= 4 and vertex-on-hyperplane conditions meet with length 2", "2", [&] {
    auto r = miniversal_length2_check(f);
    return Outcome{str(static_cast<std::int64_t>(r.colength)), r.pass && r.colength == 2};
  });
}

void rulings_section(Section& s, const RunConfig& c, const Rng& rng) {
  const PrimeField f(c.ruling_prime);
  const auto n = static_cast<std::size_t>(c.trials.ruling_quadrics);
  const std::size_t per_class = static_cast<std::size_t>(c.ruling_prime) + 1;
  const auto base = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}});
  std::vector<QuadricForm> quadrics;
  for (std::size_t t = 0; t < n; ++t) {
    Rng sub = rng.split(t);
    quadrics.push_back(base.congruent(random_invertible_matrix(f, sub, 5)));
  }
  std::vector<Rulings> rulings;
  s.check("two_rulings", "planes on a split rank-4 quadric fall into two rulings of p+1 planes",
          std::to_string(n) + " x (" + std::to_string(per_class) + ", " + std::to_string(per_class) + ")", [&] {
            std::string observed;
            bool ok = true;
            for (const auto& q : quadrics) {
              rulings.push_back(planes_on(q));
              const auto& r = rulings.back();
              observed += (observed.empty() ? "" : " ") + tuple_str(r.classes[0].size(), r.classes[1].size());
              ok = ok && r.classes[0].size() == per_class && r.classes[1].size() == per_class;
            }
            return Outcome{observed, ok};
          });
  s.check("same_ruling_equivalence", "same_ruling is an equivalence relation with two classes",
          "2 classes on " + ratio(n, n) + " quadrics", [&] {
            if (rulings.size() != n) return Outcome{"rulings unavailable", false};
            std::size_t good = 0;
            for (std::size_t t = 0; t < n; ++t) {
              std::vector<std::pair<const PlaneP4*, int>> all;
              for (int k = 0; k < 2; ++k)
                for (const auto& p : rulings[t].classes[k]) all.emplace_back(&p, k);
              bool ok = !rulings[t].classes[0].empty() && !rulings[t].classes[1].empty();
              for (const auto& [a, ka] : all)
                for (const auto& [b, kb] : all) ok = ok && same_ruling(quadrics[t], *a, *b) == (ka == kb);
              good += ok;
            }
            return Outcome{"2 classes on " + ratio(good, n) + " quadrics", good == n};
          });
}

std::string describe(const LineClassification& c, const PreimageResult& pre) {
  std::string v = pre.verdict == PreimageVerdict::SplitTwoLines ? "SplitTwoLines"
                                                                 : "Irreducible genus " + std::to_string(pre.genus);
  return to_string(c.family) + ", " + std::to_string(c.locus.distinct_count) + " rank-3 members, " + v;
}

void lines_section(Section& s, const RunConfig& c, const Rng& rng) {
  const PrimeField f(c.enumeration_prime);
  Rng draw = rng.split(0);
  std::optional<Pencil> family2;
  for (int attempt = 0; attempt < 20 && !family2; ++attempt) {
    Pencil p = random_common_vertex_pencil(f, draw);
    if (rank3_locus(p).distinct_count == 4) family2 = p;
  }
  struct Case {
    std::string name;
    std::string claim;
    std::optional<Pencil> pencil;
    LineFamily family;
    int count;
  };
  const std::vector<Case> cases{
      {"family1", "x0(l x2 - m x3) + x1(l x3 - m x4) lies in a common plane and splits in W", family1_normal_form(f),
       LineFamily::CommonPlane, 0},
      {"family2", "a pencil of quadrics in x1..x4 has a common vertex and an elliptic preimage", family2,
       LineFamily::CommonVertex, 4},
      {"family3", "l(x0^2 + x1 x2) + m(x2 x3 + x4^2) is tangent at its special members, rational preimage",
       family3_normal_form(f), LineFamily::Rank2Special, 2},
  };
  const std::vector<std::string> expected{"CommonPlane, 0 rank-3 members, SplitTwoLines",
                                          "CommonVertex, 4 rank-3 members, Irreducible genus 1",
                                          "Rank2Special, 2 rank-3 members, Irreducible genus 0"};
  const auto n = static_cast<std::size_t>(c.trials.conjugates);
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const Case& cs = cases[k];
    s.check(cs.name + "_normal_form", cs.claim, expected[k], [&] {
      if (!cs.pencil) return Outcome{"no pencil with four distinct rank-3 members drawn", false};
      auto cl = classify_line(*cs.pencil);
      const std::string obs = describe(cl, preimage_analysis(*cs.pencil));
      return Outcome{obs, obs == expected[k]};
    });
    s.check(cs.name + "_conjugates", "line classification is invariant under coordinate changes",
            ratio(n, n) + " " + to_string(cs.family), [&] {
              if (!cs.pencil) return Outcome{"no pencil", false};
              Rng sub = rng.split(k + 1);
              std::size_t good = 0;
              for (std::size_t t = 0; t < n; ++t) {
                auto cl = classify_line(random_conjugate(*cs.pencil, sub));
                good += cl.family == cs.family && cl.locus.distinct_count == cs.count;
              }
              return Outcome{ratio(good, n) + " " + to_string(cs.family), good == n};
            });
  }
  s.info("family3_special_rank", "rank of the special members of the family-3 normal form", [&] {
    const Pencil p = family3_normal_form(f);
    std::string obs;
    for (const auto& r : rank3_locus(p).rational_points)
      obs += (obs.empty() ? "" : ", ") + std::to_string(p.member(r.lambda, r.mu).rank());
    return Outcome{"ranks " + obs, true};
  });
}

void sigma_section(Section& s, const RunConfig& c, const Rng& rng) {
  const PrimeField f(c.certificate_prime);
  std::optional<TorsionEvidence> ev;
  auto evidence = [&]() -> const TorsionEvidence& {
    if (!ev) {
      Rng sub = rng.split(0);
      ev = torsion_evidence(family1_normal_form(f), sub);
    }
    return *ev;
  };
  s.check("pluecker_degrees", "Pluecker degrees of the sections s0, C''(c), C'(l)", "(0, 1, 2)", [&] {
    const auto& e = evidence();
    return Outcome{tuple_str(e.degree_s0, e.degree_double_prime, e.degree_prime),
                   e.degree_s0 == 0 && e.degree_double_prime == 1 && e.degree_prime == 2};
  });
  s.check("sigma_pair", "sigma of the lifts L' and L''", "(1, 0)", [&] {
    const auto& e = evidence();
    return Outcome{tuple_str(e.sigma_prime_line, e.sigma_double_prime_line),
                   e.sigma_prime_line == 1 && e.sigma_double_prime_line == 0};
  });
  s.check("sigma_via_second_section", "sigma of L' agrees between s0 and C'(l)", "1", [&] {
    const auto& e = evidence();
    return Outcome{std::to_string(e.sigma_prime_section), e.sigma_prime_section == 1};
  });
  s.check("meet_patterns", "two C' sections meet once, two C'' sections are disjoint", "(1, 0)", [&] {
    const auto& e = evidence();
    return Outcome{tuple_str(e.meet_prime_prime, e.meet_double_prime_double_prime),
                   e.meet_prime_prime == 1 && e.meet_double_prime_double_prime == 0};
  });
  s.check("torsion_verdict", "L' - L'' is numerically trivial with odd sigma difference", "Torsion", [&] {
    const auto& e = evidence();
    return Outcome{to_string(e.certificate.verdict), e.certificate.verdict == TorsionVerdict::Torsion};
  });
  const auto n = static_cast<std::size_t>(c.trials.torsion_conjugates);
  s.check("torsion_conjugates", "the torsion certificate survives coordinate changes", ratio(n, n) + " Torsion", [&] {
    std::size_t good = 0;
    for (std::size_t t = 0; t < n; ++t) {
      Rng sub = rng.split(t + 1);
      auto e = torsion_evidence(random_conjugate(family1_normal_form(f), sub), sub);
      good += e.certificate.verdict == TorsionVerdict::Torsion && e.meet_prime_prime == 1 &&
              e.meet_double_prime_double_prime == 0 && e.sigma_prime_line + e.sigma_double_prime_line == 1;
    }
    return Outcome{ratio(good, n) + " Torsion", good == n};
  });
}

const Instance& instance_for(std::optional<Instance>& slot, const std::optional<Instance>& supplied,
                             std::uint64_t seed, std::uint64_t p) {
  if (supplied) return *supplied;
  if (!slot) slot = gen_instance(seed, PrimeField(p));
  return *slot;
}

void instance_section(Section& s, const RunConfig& c, const Rng& rng, const std::optional<Instance>& supplied) {
  std::optional<Instance> slot;
  const Instance* inst = nullptr;
  s.check("generation", "the net is symmetric with det M(x) not identically zero", "valid net", [&] {
    inst = &instance_for(slot, supplied, c.seed, c.enumeration_prime);
    return Outcome{"valid net over GF(" + std::to_string(inst->field().modulus()) + "), reseeds " +
                       std::to_string(inst->reseeds()),
                   true};
  });
  if (!inst) return;
  const auto pairs = c.trials.duality_pairs;
  s.check("duality", "M(x) y = N(y)^T x", std::to_string(pairs) + " pairs", [&] {
    Rng sub = rng.split(0);
    const bool ok = duality_identity_check(*inst, sub, pairs);
    return Outcome{ok ? std::to_string(pairs) + " pairs" : "mismatch", ok};
  });
  s.check("json_round_trip", "instance serialization round trip", "identical tensor", [&] {
    const Instance back = Instance::from_json(inst->to_json());
    const bool ok = back.tensor() == inst->tensor() && back.field() == inst->field();
    return Outcome{ok ? "identical tensor" : "tensor differs", ok};
  });
  const auto npts = static_cast<std::size_t>(c.trials.smoothness_points);
  s.check("S_smoothness", "S is smooth at sampled points", ratio(npts, npts) + " Smooth", [&] {
    Rng sub = rng.split(1);
    auto pts = sample_S_points(*inst, npts, sub);
    std::map<std::string, std::size_t> by;
    for (const auto& r : s_smoothness_spotcheck(*inst, pts)) ++by[to_string(r.status)];
    std::string obs;
    for (const auto& [k, v] : by) obs += (obs.empty() ? "" : ", ") + ratio(v, npts) + " " + k;
    return Outcome{obs, by["Smooth"] == npts};
  });
  s.check("DH_divisor", "quadrics with vertex on a hyperplane form a divisor of degree 10", "deg D_H = 10", [&] {
    Rng sub = rng.split(2);
    Vec h(5);
    do
      for (auto& e : h) e = sub.element(inst->field());
    while (std::all_of(h.begin(), h.end(), [](Elem e) { return e == 0; }));
    auto d = dh_divisor_check(*inst, h, sub, static_cast<std::size_t>(c.trials.divisor_samples));
    std::string obs = "deg D_H = " + str(d.implied_deg_DH) + " (Chow " + str(d.chow_deg_DH) + ")";
    if (d.samples_checked > 0) obs += ", " + ratio(d.samples_vanishing, d.samples_checked) + " samples vanish";
    return Outcome{obs, d.pass && d.implied_deg_DH == 10};
  });
  s.negative("broken_symmetry", "a tensor not symmetric in (l, i) is rejected", "BadParameter", [&] {
    Instance::Tensor t = inst->tensor();
    const std::uint64_t p = inst->field().modulus();
    t[0][1][0] = (t[0][1][0] + 1) % p;
    try {
      Instance bad(inst->field(), inst->seed(), t);
      return Outcome{"accepted", false};
    } catch (const Error& e) {
      return Outcome{std::string(to_string(e.kind())), e.kind() == ErrorKind::BadParameter};
    }
  });
}

std::string profile_text(const HilbertProfile& h) {
  return "dim " + std::to_string(h.fit.dimension) + ", degree " + std::to_string(h.fit.degree) + " from d = " +
         std::to_string(h.fit.stable_from);
}

void hilbert_section(Section& s, const RunConfig& c, const Rng& rng, const std::optional<Instance>& supplied) {
  std::optional<Instance> slot;
  s.check("plane_section", "Hilbert function of S on a random plane stabilizes at 15", "dim 0, degree 15", [&] {
    const Instance& inst = instance_for(slot, supplied, c.seed, c.enumeration_prime);
    Rng sub = rng.split(0);
    auto ps = plane_section_profile(inst, sub, c.hilbert.plane_min, c.hilbert.plane_max);
    const bool ok = ps.profile.fit.dimension == 0 && ps.profile.fit.degree == 15 && ps.profile.values.back() == 15;
    return Outcome{profile_text(ps.profile), ok};
  });
  std::optional<HilbertProfile> locus;
  s.check("rank3_locus_dimension", "the rank <= 3 locus of M(x) is a surface", "dim 2", [&] {
    const Instance& inst = instance_for(slot, supplied, c.seed, c.enumeration_prime);
    locus = rank3_locus_profile(inst, c.hilbert.locus_min, c.hilbert.locus_max);
    return Outcome{"dim " + std::to_string(locus->fit.dimension), locus->fit.dimension == 2};
  });
  s.info("rank3_locus_degree", "degree of the rank <= 3 locus of M(x)", [&] {
    if (!locus) return Outcome{"unavailable", false};
    return Outcome{"degree " + std::to_string(locus->fit.degree) + " from d = " + std::to_string(locus->fit.stable_from),
                   true};
  });
}

void secants_section(Section& s, const RunConfig& c, const Rng& rng, const std::optional<Instance>& supplied) {
  std::optional<Instance> slot;
  const auto n = static_cast<std::size_t>(c.trials.secant_points);
  std::optional<Rank3Sampling> sampling;
  const Instance* inst = nullptr;
  s.check("rank3_sampling", "rank-3 members come from pencils at points of S", std::to_string(n) + " points", [&] {
    inst = &instance_for(slot, supplied, c.seed, c.certificate_prime);
    Rng sub = rng.split(0);
    sampling = sample_rank3_points(*inst, n, sub);
    return Outcome{std::to_string(sampling->points.size()) + " points from " +
                       std::to_string(sampling->pencils_tried) + " pencils",
                   sampling->points.size() == n};
  });
  if (!sampling) return;
  std::size_t valid = 0;
  std::set<Vec> lines;
  s.check("five_secant_certificates", "the vertex line of a rank-3 member meets S in a length-5 scheme",
          ratio(n, n) + " gcd degree 5", [&] {
            Rng sub = rng.split(1);
            for (const auto& pt : sampling->points) {
              auto cert = five_secant_certificate(*inst, pt.x, sub, pt.s_point);
              if (cert.valid && cert.gcd_degree == 5) {
                ++valid;
                lines.insert(cert.line_pluecker);
              }
            }
            return Outcome{ratio(valid, n) + " gcd degree 5", valid == n};
          });
  const std::size_t need = (n + 1) / 2;
  s.check("distinct_vertex_lines", "the 5-secants form a family, not a few lines", ">= " + std::to_string(need), [&] {
    return Outcome{std::to_string(lines.size()), lines.size() >= need};
  });
  s.negative("rank4_certificate", "a rank-4 member is refused by the certificate", "NotRankThree", [&] {
    std::optional<Vec> x;
    for (const auto& pt : sampling->points) {
      if (!pt.s_point) continue;
      auto sp = pencil_at_S_point(*inst, *pt.s_point);
      for (const auto& cand : {sp.x1, sp.x2}) {
        if (rank(inst->M(cand)) == 4) {
          x = cand;
          break;
        }
      }
      if (x) break;
    }
    if (!x) return Outcome{"no rank-4 member found", false};
    Rng sub = rng.split(2);
    try {
      five_secant_certificate(*inst, *x, sub);
      return Outcome{"certificate issued", false};
    } catch (const Error& e) {
      return Outcome{std::string(to_string(e.kind())), e.kind() == ErrorKind::NotRankThree};
    }
  });
}

}  // namespace

Report run_report(const RunConfig& config, const std::optional<Instance>& instance) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  Report report{config, std::nullopt, {}, true, 0};
  if (instance) report.instance = instance->to_json();
  const Rng root(config.seed);
  const auto& names = section_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& name = names[k];
    if (!config.sections.empty() &&
        std::find(config.sections.begin(), config.sections.end(), name) == config.sections.end())
      continue;
    Section s(name, report.rows);
    const Rng rng = root.split(k);
    if (name == "chow") chow_section(s);
    else if (name == "a1") a1_section(s, config, rng);
    else if (name == "miniversal") miniversal_section(s, config);
    else if (name == "rulings") rulings_section(s, config, rng);
    else if (name == "lines") lines_section(s, config, rng);
    else if (name == "sigma") sigma_section(s, config, rng);
    else if (name == "instance") instance_section(s, config, rng, instance);
    else if (name == "hilbert") hilbert_section(s, config, rng, instance);
    else if (name == "secants") secants_section(s, config, rng, instance);
  }
  for (const auto& r : report.rows) report.pass = report.pass && counts_as_pass(r.verdict);
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
  report.runtime_ms = std::round(dt.count() * 1000.0) / 1000.0;
  return report;
}

std::string to_json(const Report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"section", row.section},   {"name", row.name},         {"claim", row.claim},
           {"expected", row.expected}, {"observed", row.observed}, {"verdict", to_string(row.verdict)}};
    if (r.config.timings) j["runtime_ms"] = row.runtime_ms;
    rows.push_back(std::move(j));
  }
  json out{{"config", config_json(r.config)}, {"checks", rows}, {"verdict", r.pass ? "pass" : "fail"}};
  if (r.instance) out["instance"] = json::parse(*r.instance);
  if (r.config.timings) out["runtime_ms"] = r.runtime_ms;
  return out.dump(2) + "\n";
}

namespace {

std::string cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "# quadrint report\n\n";
  os << "seed " << r.config.seed << ", enumeration prime " << r.config.enumeration_prime << ", certificate prime "
     << r.config.certificate_prime << ", ruling prime " << r.config.ruling_prime << "\n\n";
  os << "| section | check | claim | expected | observed | verdict |" << (r.config.timings ? " ms |" : "") << "\n";
  os << "|---|---|---|---|---|---|" << (r.config.timings ? "---:|" : "") << "\n";
  for (const auto& row : r.rows) {
    os << "| " << row.section << " | " << row.name << " | " << cell(row.claim) << " | " << cell(row.expected) << " | "
       << cell(row.observed) << " | " << to_string(row.verdict) << " |";
    if (r.config.timings) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << row.runtime_ms;
      os << " " << ms.str() << " |";
    }
    os << "\n";
  }
  os << "\n**" << (r.pass ? "PASS" : "FAIL") << "**";
  if (r.config.timings) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << r.runtime_ms;
    os << " in " << ms.str() << " ms";
  }
  os << "\n";
  return os.str();
}

}  // namespace quadrint
