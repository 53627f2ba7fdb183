#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqs/rat.hpp"
#include "eqs/report.hpp"

namespace eqs {

// Run configuration shared by every suite. Unset orders fall back to per-suite defaults.
struct SuiteConfig {
  std::vector<std::string> suites;
  std::string q = "default";  // "default", "symbolic" or a comma list of rationals
  int q_samples = 5;          // random (q, z1, z2, z3) tuples for graded-ybe at theta = 1
  std::vector<int> theta;     // drinfeld: each; r-universal: one pair; graded-ybe: the theta != 1 triple
  std::string w_mode = "symbolic";
  std::vector<Rat> xi = {Rat(0), Rat(1)};
  std::optional<int> order_p, order_z, order_zeta, modes;
  std::uint64_t seed = 20240917;
  std::string out;
  std::string format = "json";
  int workers = 1;
  std::size_t term_budget = 2000000;
};

const std::vector<std::string>& suite_ids();

// Throws ConfigError on any invalid field.
void validate(const SuiteConfig& c);
json config_json(const SuiteConfig& c);
// Fields absent from j keep their current value in c.
void merge_config(SuiteConfig& c, const json& j);

VerificationReport run_suite(const std::string& id, const SuiteConfig& c);
// Runs c.suites on up to c.workers threads; reports come back in c.suites order.
std::vector<VerificationReport> run_suites(const SuiteConfig& c);

// X11, X12, X21, X22 coefficient tables of the vertex twistor as CSV.
std::string xij_csv(const SuiteConfig& c);
std::string results_csv(const std::vector<VerificationReport>& reports);

}  // namespace eqs
