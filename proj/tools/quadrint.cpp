#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadrint/error.hpp"
#include "quadrint/instance.hpp"
#include "quadrint/lines.hpp"
#include "quadrint/report.hpp"
#include "quadrint/rng.hpp"
#include "quadrint/sections.hpp"

using namespace quadrint;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string instance_path;
  std::string config_path;
  std::string format = "json";
  std::string out;
  std::vector<std::string> sections;
  bool no_timings = false;
  std::string q1;
  std::string q2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Config, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::Config, "cannot write " + o.out);
}

RunConfig build_config(const Options& o) {
  RunConfig c;
  if (const char* env = std::getenv("QUADRINT_SEED")) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Config, std::string("QUADRINT_SEED is not an integer: ") + env);
    }
  }
  if (!o.config_path.empty()) c = config_from_json(read_file(o.config_path), c);
  if (o.seed) c.seed = *o.seed;
  if (o.prime) c.enumeration_prime = c.certificate_prime = *o.prime;
  if (o.trials) {
    const int n = *o.trials;
    c.trials = TrialCounts{n, n, n, n, n, n, n, n};
  }
  if (!o.sections.empty()) c.sections = o.sections;
  if (o.no_timings) c.timings = false;
  validate(c);
  return c;
}

std::optional<Instance> load_instance(const Options& o) {
  if (o.instance_path.empty()) return std::nullopt;
  try {
    return Instance::from_json(read_file(o.instance_path));
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, std::string("instance ") + o.instance_path + ": " + e.what());
  }
}

int run_sections(const Options& o, std::vector<std::string> forced) {
  Options local = o;
  if (!forced.empty()) local.sections = std::move(forced);
  const RunConfig c = build_config(local);
  const auto inst = load_instance(local);
  const Report r = run_report(c, inst);
  emit(local, local.format == "md" ? to_markdown(r) : to_json(r));
  return r.pass ? kExitPass : kExitFail;
}

std::vector<std::int64_t> parse_coefficients(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string w;
    while (words >> w) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoll(w, &used));
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Config, "not an integer: " + w);
      }
    }
  }
  if (out.size() != 15) throw Error(ErrorKind::Config, "a quadric needs 15 coefficients, got " + std::to_string(out.size()));
  return out;
}

json vec_json(const Vec& v) { return json(std::vector<Elem>(v.begin(), v.end())); }

int line_classify(const Options& o) {
  const RunConfig c = build_config(o);
  const PrimeField f(c.enumeration_prime);
  const auto a = parse_coefficients(o.q1);
  const auto b = parse_coefficients(o.q2);
  std::optional<Pencil> pencil;
  try {
    pencil.emplace(QuadricForm::from_coefficients(f, 5, a), QuadricForm::from_coefficients(f, 5, b));
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  json out{{"prime", f.modulus()}};
  int code = kExitPass;
  try {
    const auto cl = classify_line(*pencil);
    out["family"] = to_string(cl.family);
    out["rank3_members"] = cl.locus.distinct_count;
    json pts = json::array();
    for (const auto& r : cl.locus.rational_points) pts.push_back({r.lambda, r.mu});
    out["rational_rank3_members"] = pts;
    if (cl.common_vertex) out["common_vertex"] = vec_json(*cl.common_vertex);
    if (cl.common_plane) out["common_plane"] = cl.common_plane->to_string();
    if (!cl.reason.empty()) out["reason"] = cl.reason;
    if (cl.family != LineFamily::NonGeneric) {
      const auto pre = preimage_analysis(*pencil);
      out["ramification"] = pre.ramification;
      out["preimage"] = pre.verdict == PreimageVerdict::SplitTwoLines ? "SplitTwoLines" : "Irreducible";
      if (pre.verdict == PreimageVerdict::Irreducible) out["genus"] = pre.genus;
    }
  } catch (const Error& e) {
    out["error"] = std::string(to_string(e.kind()));
    out["message"] = e.what();
    code = kExitFail;
  }
  emit(o, out.dump(2) + "\n");
  return code;
}

json lift_json(const Lift& l) {
  return {{"id", l.id}, {"hyperplane_degree", l.hyperplane_degree}, {"pluecker_degree", l.pluecker_degree},
          {"sigma", l.sigma}};
}

int torsion_cert(const Options& o) {
  const RunConfig c = build_config(o);
  const PrimeField f(c.certificate_prime);
  Rng rng(c.seed);
  const auto ev = torsion_evidence(family1_normal_form(f), rng);
  json out{{"prime", f.modulus()},
           {"seed", c.seed},
           {"pluecker_degrees", {ev.degree_s0, ev.degree_double_prime, ev.degree_prime}},
           {"sigma", {ev.sigma_prime_line, ev.sigma_double_prime_line}},
           {"meet_patterns", {ev.meet_prime_prime, ev.meet_double_prime_double_prime, ev.meet_prime_double_prime}},
           {"lifts", {lift_json(ev.certificate.first), lift_json(ev.certificate.second)}},
           {"hypothesis", ev.certificate.hypothesis},
           {"verdict", to_string(ev.certificate.verdict)}};
  emit(o, out.dump(2) + "\n");
  return ev.certificate.verdict == TorsionVerdict::Torsion ? kExitPass : kExitFail;
}

int gen_instance_cmd(const Options& o) {
  const RunConfig c = build_config(o);
  const Instance inst = gen_instance(c.seed, PrimeField(c.enumeration_prime));
  emit(o, inst.to_json() + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for nets of quadrics in P^4 and lines in the quintic of singular quadrics"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prime", o.prime, "Prime for the enumeration and certificate checks");
  app.add_option("--seed", o.seed, "Seed (falls back to QUADRINT_SEED, then 1)");
  app.add_option("--trials", o.trials, "Override every trial count");
  app.add_option("--instance", o.instance_path, "Instance JSON replacing the seeded nets");
  app.add_option("--config", o.config_path, "JSON run configuration; unknown keys are rejected");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", o.out, "Write output here instead of stdout");
  app.add_flag("--no-timings", o.no_timings, "Leave runtimes out of the report");

  auto* report = app.add_subcommand("report", "Run every check, or those selected with --section");
  report->add_option("--section", o.sections, "Section to run (repeatable)");

  const std::vector<std::pair<std::string, std::string>> single{
      {"chow", "chow"},         {"a1-check", "a1"},        {"miniversal", "miniversal"},
      {"rulings", "rulings"},   {"lines", "lines"},        {"sigma-check", "sigma"},
      {"instance", "instance"}, {"hilbert", "hilbert"},    {"secants", "secants"},
  };
  std::vector<std::pair<CLI::App*, std::string>> section_cmds;
  for (const auto& [cmd, section] : single)
    section_cmds.emplace_back(app.add_subcommand(cmd, "Run the " + section + " checks"), section);

  auto* classify = app.add_subcommand("line-classify", "Classify the pencil spanned by two quadrics");
  classify->add_option("q1", o.q1, "15 coefficients of x_i x_j, i <= j, comma or space separated")->required();
  classify->add_option("q2", o.q2, "Second quadric")->required();
  auto* torsion = app.add_subcommand("torsion-cert", "Torsion certificate for the common-plane normal form");
  auto* gen = app.add_subcommand("gen-instance", "Write the seeded instance as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (report->parsed()) return run_sections(o, {});
    for (const auto& [cmd, section] : section_cmds)
      if (cmd->parsed()) return run_sections(o, {section});
    if (classify->parsed()) return line_classify(o);
    if (torsion->parsed()) return torsion_cert(o);
    if (gen->parsed()) return gen_instance_cmd(o);
  } catch (const Error& e) {
    std::cerr << "quadrint: " << e.what() << "\n";
    return e.kind() == ErrorKind::Config ? kExitConfig : kExitFail;
  }
  return kExitConfig;
}
