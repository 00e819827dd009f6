#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadrint/instance.hpp"

namespace quadrint {

struct TrialCounts {
  int a1_slices = 25;
  int conjugates = 50;
  int ruling_quadrics = 5;
  int duality_pairs = 100;
  int smoothness_points = 20;
  int secant_points = 20;
  int torsion_conjugates = 5;
  int divisor_samples = 10;
};

struct HilbertRanges {
  int plane_min = 5;
  int plane_max = 12;
  int locus_min = 4;
  int locus_max = 8;
};

/// Everything a run depends on. Two runs with equal configs produce
/// byte-identical reports once timings are left out.
struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t enumeration_prime = 101;   // lines, instance, hilbert
  std::uint64_t certificate_prime = 32003; // a1, miniversal, sigma, secants
  std::uint64_t ruling_prime = 7;
  TrialCounts trials;
  HilbertRanges hilbert;
  std::vector<std::string> sections;       // empty: all, in canonical order
  bool timings = true;
};

/// Section names in the order a full report runs them.
const std::vector<std::string>& section_names();

/// Throws Config on a non-prime or even modulus, trial counts below 1,
/// inverted degree ranges or unknown section names.
void validate(const RunConfig& config);

/// Overlays a JSON object onto `base`. Unknown keys, wrong types and
/// malformed text throw Config.
RunConfig config_from_json(const std::string& text, RunConfig base = {});
std::string config_to_json(const RunConfig& config);

enum class Verdict { Pass, Fail, Info, ExpectedFail, UnexpectedPass };
std::string to_string(Verdict v);

/// One check. Negative rows feed tampered input; their success is ExpectedFail.
struct CheckRow {
  std::string section;
  std::string name;
  std::string claim;
  std::string expected;
  std::string observed;
  Verdict verdict;
  double runtime_ms;
};

struct Report {
  RunConfig config;
  std::optional<std::string> instance;  // JSON of a supplied instance
  std::vector<CheckRow> rows;
  bool pass;
  double runtime_ms;
};

bool counts_as_pass(Verdict v);

/// Runs the configured sections. A supplied instance replaces the seeded
/// ones in the instance, hilbert and secants sections.
Report run_report(const RunConfig& config, const std::optional<Instance>& instance = std::nullopt);

/// Canonical JSON: sorted keys, rows in run order, two-space indent.
std::string to_json(const Report& report);
std::string to_markdown(const Report& report);

}  // namespace quadrint
