#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "quadrint/error.hpp"
#include "quadrint/report.hpp"

using namespace quadrint;
using nlohmann::json;

namespace {

RunConfig only(std::vector<std::string> sections) {
  RunConfig c;
  c.sections = std::move(sections);
  c.timings = false;
  return c;
}

const CheckRow& row(const Report& r, const std::string& name) {
  auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const CheckRow& x) { return x.name == name; });
  REQUIRE(it != r.rows.end());
  return *it;
}

void check_config_error(const std::string& text) {
  try {
    config_from_json(text);
    FAIL("accepted: " << text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
  }
}

}  // namespace

TEST_CASE("default configuration") {
  RunConfig c;
  CHECK(c.seed == 1);
  CHECK(c.enumeration_prime == 101);
  CHECK(c.certificate_prime == 32003);
  CHECK(c.ruling_prime == 7);
  CHECK(c.trials.a1_slices == 25);
  CHECK(c.trials.conjugates == 50);
  CHECK(c.trials.ruling_quadrics == 5);
  CHECK(c.trials.duality_pairs == 100);
  CHECK(c.trials.smoothness_points == 20);
  CHECK(c.trials.secant_points == 20);
  CHECK_NOTHROW(validate(c));
  CHECK(section_names().size() == 9);
}

TEST_CASE("config overlay and rejection") {
  auto c = config_from_json(R"({"seed": 9, "prime": 103, "trials": {"conjugates": 3}, "sections": ["chow"]})");
  CHECK(c.seed == 9);
  CHECK(c.enumeration_prime == 103);
  CHECK(c.certificate_prime == 103);
  CHECK(c.ruling_prime == 7);
  CHECK(c.trials.conjugates == 3);
  CHECK(c.trials.a1_slices == 25);
  CHECK(c.sections == std::vector<std::string>{"chow"});
  CHECK(config_from_json("{}").seed == 1);

  check_config_error(R"({"colour": 1})");
  check_config_error(R"({"trials": {"conjugate": 3}})");
  check_config_error(R"({"hilbert": {"plane_min": 1, "depth": 2}})");
  check_config_error(R"({"seed": "one"})");
  check_config_error(R"({"trials": 5})");
  check_config_error(R"([1, 2])");
  check_config_error("{seed: 1");
}

TEST_CASE("config echo round trips") {
  RunConfig c;
  c.seed = 77;
  c.certificate_prime = 10007;
  c.trials.secant_points = 4;
  c.hilbert.locus_max = 9;
  c.sections = {"hilbert", "chow"};
  c.timings = false;
  const RunConfig back = config_from_json(config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));
  CHECK(back.seed == 77);
  CHECK(back.certificate_prime == 10007);
  CHECK(back.trials.secant_points == 4);
  CHECK(back.hilbert.locus_max == 9);
}

TEST_CASE("validation") {
  auto bad = [](auto mutate) {
    RunConfig c;
    mutate(c);
    try {
      validate(c);
      return false;
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Config;
    }
  };
  CHECK(bad([](RunConfig& c) { c.enumeration_prime = 2; }));
  CHECK(bad([](RunConfig& c) { c.certificate_prime = 9; }));
  CHECK(bad([](RunConfig& c) { c.certificate_prime = 1; }));
  CHECK(bad([](RunConfig& c) { c.ruling_prime = 2003; }));
  CHECK(bad([](RunConfig& c) { c.trials.duality_pairs = 0; }));
  CHECK(bad([](RunConfig& c) { c.hilbert.plane_max = c.hilbert.plane_min + 1; }));
  CHECK(bad([](RunConfig& c) { c.sections = {"chow", "bogus"}; }));
  CHECK_FALSE(bad([](RunConfig& c) { c.enumeration_prime = 3; }));
}

TEST_CASE("prime 2 is refused before any check runs") {
  RunConfig c;
  c.enumeration_prime = 2;
  CHECK_THROWS_AS(run_report(c), Error);
}

TEST_CASE("verdict accounting") {
  CHECK(counts_as_pass(Verdict::Pass));
  CHECK(counts_as_pass(Verdict::Info));
  CHECK(counts_as_pass(Verdict::ExpectedFail));
  CHECK_FALSE(counts_as_pass(Verdict::Fail));
  CHECK_FALSE(counts_as_pass(Verdict::UnexpectedPass));
  CHECK(to_string(Verdict::ExpectedFail) == "expected-fail");
}

TEST_CASE("chow section with its negative row") {
  const Report r = run_report(only({"chow"}));
  CHECK(r.pass);
  REQUIRE(r.rows.size() == 5);
  CHECK(row(r, "deg_R").observed == "18");
  CHECK(row(r, "deg_S").observed == "15");
  CHECK(row(r, "E4_E5_pairing").observed == "60 = 4*15");
  CHECK(row(r, "deg_DH").observed == "10");
  const auto& t = row(r, "tampered_E5_class");
  CHECK(t.verdict == Verdict::ExpectedFail);
  CHECK(t.observed == "9");
  for (const auto& x : r.rows) CHECK(x.section == "chow");
}

TEST_CASE("sections run in canonical order whatever the config order") {
  const Report r = run_report(only({"sigma", "chow", "miniversal"}));
  CHECK(r.pass);
  std::vector<std::string> seen;
  for (const auto& x : r.rows)
    if (seen.empty() || seen.back() != x.section) seen.push_back(x.section);
  CHECK(seen == std::vector<std::string>{"chow", "miniversal", "sigma"});
  CHECK(row(r, "sigma_pair").observed == "(1, 0)");
  CHECK(row(r, "pluecker_degrees").observed == "(0, 1, 2)");
  CHECK(row(r, "colength").observed == "2");
}

TEST_CASE("reports are byte-identical without timings") {
  RunConfig c = only({"chow", "rulings", "sigma", "instance"});
  c.trials.smoothness_points = 3;
  c.seed = 5;
  const std::string a = to_json(run_report(c));
  const std::string b = to_json(run_report(c));
  CHECK(a == b);
  CHECK(a.find("runtime_ms") == std::string::npos);
  c.seed = 6;
  CHECK(to_json(run_report(c)) != a);

  c.timings = true;
  c.sections = {"chow"};
  const std::string t = to_json(run_report(c));
  CHECK(t.find("runtime_ms") != std::string::npos);
}

TEST_CASE("json layout") {
  const Report r = run_report(only({"chow"}));
  const json j = json::parse(to_json(r));
  CHECK(j.at("verdict") == "pass");
  REQUIRE(j.at("checks").size() == r.rows.size());
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& c = j.at("checks")[k];
    CHECK(c.at("name") == r.rows[k].name);
    CHECK(c.at("verdict") == to_string(r.rows[k].verdict));
    std::vector<std::string> keys;
    for (const auto& item : c.items()) keys.push_back(item.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
  }
  CHECK(j.at("config").at("seed") == 1);
  CHECK_FALSE(j.contains("instance"));
}

TEST_CASE("markdown layout") {
  const std::string md = to_markdown(run_report(only({"chow"})));
  CHECK(md.find("| section | check | claim | expected | observed | verdict |\n") != std::string::npos);
  CHECK(md.find("| chow | deg_R |") != std::string::npos);
  CHECK(md.find("expected-fail") != std::string::npos);
  CHECK(md.find("**PASS**") != std::string::npos);
}

TEST_CASE("a net with a three-dimensional S fails the surface checks") {
  Instance::Tensor t{};
  for (std::size_t l = 0; l < 5; ++l) t[l][l][l] = 1;
  const Instance diag(PrimeField(101), 0, t);
  RunConfig c = only({"hilbert"});
  const Report r = run_report(c, diag);
  CHECK_FALSE(r.pass);
  CHECK(row(r, "plane_section").verdict == Verdict::Fail);
  CHECK(row(r, "rank3_locus_dimension").verdict == Verdict::Fail);
  REQUIRE(r.instance.has_value());
  CHECK(json::parse(to_json(r)).contains("instance"));
}

TEST_CASE("supplied instance drives the instance section") {
  const Instance inst = gen_instance(11, PrimeField(103));
  RunConfig c = only({"instance"});
  c.trials.smoothness_points = 4;
  const Report r = run_report(c, inst);
  CHECK(r.pass);
  CHECK(row(r, "generation").observed.find("GF(103)") != std::string::npos);
  CHECK(row(r, "broken_symmetry").verdict == Verdict::ExpectedFail);
}
