// eqs-verify: runs verification suites and writes reports.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "eqs/errors.hpp"
#include "eqs/suites.hpp"

namespace {

using eqs::json;

int emit(const eqs::SuiteConfig& c, const std::vector<eqs::VerificationReport>& reports) {
  std::string body;
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    body = (reports.size() == 1 ? arr[0] : json{{"reports", arr}, {"version", "1.0.0"}}).dump(2) + "\n";
  } else if (c.format == "text") {
    for (const auto& r : reports) body += r.to_text();
  } else {
    bool tables = false;
    for (const auto& s : c.suites) tables = tables || s.rfind("vertex-", 0) == 0;
    if (tables) body += eqs::xij_csv(c);
    body += eqs::results_csv(reports);
  }
  if (c.out.empty() || c.out == "-") {
    std::cout << body;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "eqs-verify: cannot open output file " << c.out << "\n";
      return 2;
    }
    f << body;
    if (!f) {
      std::cerr << "eqs-verify: write failed for " << c.out << "\n";
      return 2;
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the quantum sl(1|1) twistors"};
  std::string config_path, suite = "all", q, theta, w_mode, xi, format;
  int q_samples = 0, order_p = 0, order_z = 0, order_zeta = 0, modes = 0, workers = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::string out;
  bool list = false;

  app.add_option("--config", config_path, "JSON config file; flags override its values");
  auto* o_suite = app.add_option("--suite", suite, "Comma-separated suite ids, or 'all'");
  auto* o_q = app.add_option("--q", q, "'symbolic' or a comma list of exact rationals");
  auto* o_qs = app.add_option("--q-samples", q_samples, "Random (q, z) tuples for graded-ybe");
  auto* o_theta = app.add_option("--theta", theta, "Comma list of positive integers");
  auto* o_w = app.add_option("--w-mode", w_mode, "'symbolic' or an exact rational w");
  auto* o_xi = app.add_option("--xi", xi, "Comma list of exact rationals for root-data");
  auto* o_p = app.add_option("--order-p", order_p, "Order in p (vertex suites: in units of p^{1/2})");
  auto* o_z = app.add_option("--order-z", order_z, "Order in z");
  auto* o_zeta = app.add_option("--order-zeta", order_zeta, "Order in zeta");
  auto* o_modes = app.add_option("--modes", modes, "Largest |n| for Drinfeld generators");
  auto* o_seed = app.add_option("--seed", seed, "Seed for sampled rational points");
  auto* o_out = app.add_option("--out", out, "Output path (default stdout)");
  auto* o_fmt = app.add_option("--format", format, "json, text or csv");
  auto* o_workers = app.add_option("--workers", workers, "Suites run concurrently");
  auto* o_budget = app.add_option("--term-budget", budget, "Max terms per polynomial or tensor element (0: off)");
  app.add_flag("--list", list, "Print the suite ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (list) {
    for (const auto& s : eqs::suite_ids()) std::cout << s << "\n";
    return 0;
  }

  eqs::SuiteConfig c;
  c.suites = eqs::suite_ids();
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw eqs::ConfigError("cannot read config file " + config_path);
      json j;
      try {
        j = json::parse(f);
      } catch (const json::exception& e) {
        throw eqs::ConfigError("config file " + config_path + ": " + e.what());
      }
      if (j.contains("suite") && j["suite"] == "all") j.erase("suite");
      eqs::merge_config(c, j);
    }
    json flags = json::object();
    if (*o_suite && suite != "all") flags["suite"] = suite;
    if (*o_q) flags["q"] = q;
    if (*o_qs) flags["q_samples"] = q_samples;
    if (*o_theta) {
      json t = json::array();
      std::stringstream ss(theta);
      for (std::string s; std::getline(ss, s, ',');) {
        try {
          t.push_back(std::stoi(s));
        } catch (const std::exception&) {
          throw eqs::ConfigError("theta must be a list of integers: '" + theta + "'");
        }
      }
      flags["theta"] = t;
    }
    if (*o_w) flags["w_mode"] = w_mode;
    if (*o_xi) {
      json t = json::array();
      std::stringstream ss(xi);
      for (std::string s; std::getline(ss, s, ',');) t.push_back(s);
      flags["xi"] = t;
    }
    if (*o_p) flags["order_p"] = order_p;
    if (*o_z) flags["order_z"] = order_z;
    if (*o_zeta) flags["order_zeta"] = order_zeta;
    if (*o_modes) flags["modes"] = modes;
    if (*o_seed) flags["seed"] = seed;
    if (*o_out) flags["out"] = out;
    if (*o_fmt) flags["format"] = format;
    if (*o_workers) flags["workers"] = workers;
    if (*o_budget) flags["term_budget"] = budget;
    eqs::merge_config(c, flags);
    eqs::validate(c);
  } catch (const eqs::ConfigError& e) {
    std::cerr << "eqs-verify: configuration error: " << e.what() << "\n";
    return 2;
  }

  std::vector<eqs::VerificationReport> reports;
  try {
    reports = eqs::run_suites(c);
  } catch (const eqs::ConfigError& e) {
    std::cerr << "eqs-verify: configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "eqs-verify: aborted: " << e.what() << "\n";
    return 1;
  }
  for (const auto& r : reports)
    for (const auto& x : r.results)
      if (x.error.rfind("resource limit", 0) == 0) std::cerr << "eqs-verify: " << r.suite << "/" << x.id << ": " << x.error << "\n";
  try {
    return emit(c, reports);
  } catch (const std::exception& e) {
    std::cerr << "eqs-verify: " << e.what() << "\n";
    return 1;
  }
}
