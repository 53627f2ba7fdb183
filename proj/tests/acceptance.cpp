// Acceptance run: one line per criterion, exact residuals and a pinned wall-time limit.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqs/suites.hpp"

using namespace eqs;

namespace {

struct Criterion {
  std::string key;
  std::string title;
  std::vector<std::string> suites;
  double limit_s;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_bad(const std::vector<VerificationReport>& reps) {
  for (const auto& r : reps)
    for (const auto& x : r.results)
      if (!x.ok()) return r.suite + "/" + x.id;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance"};
  std::vector<std::string> allow;
  app.add_option("--allow-fail", allow, "Criterion keys whose failure is recorded but does not set the exit code");
  CLI11_PARSE(app, argc, argv);
  const std::set<std::string> allowed(allow.begin(), allow.end());

  const std::vector<Criterion> crit = {
      {"graded-ybe", "graded YBE for R_VV, 5 samples at theta=1 and 2 with theta!=theta'", {"graded-ybe"}, 10},
      {"r-universal", "universal product vs closed R_VV to z^8", {"r-universal-vs-closed"}, 30},
      {"twist-axioms", "quasi-Hopf axioms of the F(w)-twisted U_q[sl(1|1)] over Q(q,w)", {"quasi-hopf-twist"}, 60},
      {"cocycle", "shifted cocycle and dynamical identities over Q(q,w,U)", {"cocycle", "dynamical-ybe"}, 60},
      {"drinfeld", "Drinfeld relations in the 2-dim image, |n|,|m| <= 4", {"drinfeld"}, 10},
      {"phi10", "1phi0 series vs Pochhammer ratio to (p,z) <= 8", {"qseries-identities"}, 5},
      {"face-diff", "face difference equation to (6,6) and initial condition", {"face-diff-eq", "face-initial"}, 60},
      {"face-dybe", "face dynamical YBE to p^4, static variant fails", {"face-dybe"}, 60},
      {"vertex-product", "vertex product vs closed forms, b_E/c_E, X_ij", {"vertex-product-vs-closed"}, 120},
      {"vertex-diff", "vertex difference equations to (p^{1/2},zeta) <= (6,6)", {"vertex-diff-eq"}, 120},
      {"vertex-ybe", "elliptic vertex R graded YBE mod p^2, ungraded fails", {"vertex-ybe"}, 120},
      {"root-data", "root data n=1..4, xi in {0,1}: pairing, isotropy, tau invariance, tau-sum", {"root-data"}, 5},
  };

  bool ok = true;
  int n_fail = 0;
  auto line = [&](const std::string& key, const std::string& title, bool pass, double t, double limit,
                  const std::string& note) {
    bool tolerated = !pass && allowed.count(key);
    std::printf("[%s] %-15s %s | tolerance: exact (residual identically 0) | %.3f s / limit %.0f s%s%s\n",
                pass ? "PASS" : "FAIL", key.c_str(), title.c_str(), t, limit, note.empty() ? "" : " | first failing: ",
                note.c_str());
    if (tolerated) std::printf("       (failure allowed by --allow-fail %s)\n", key.c_str());
    if (!pass) ++n_fail;
    if (!pass && !tolerated) ok = false;
  };

  for (const auto& c : crit) {
    SuiteConfig cfg;
    cfg.suites = c.suites;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reps;
    std::string note;
    try {
      reps = run_suites(cfg);
      note = first_bad(reps);
    } catch (const std::exception& e) {
      note = std::string("error: ") + e.what();
    }
    double t = seconds_since(t0);
    line(c.key, c.title, note.empty() && t <= c.limit_s, t, c.limit_s, note);
  }

  {
    SuiteConfig cfg;
    cfg.suites = suite_ids();
    cfg.workers = 4;
    auto t0 = std::chrono::steady_clock::now();
    auto a = run_suites(cfg);
    auto b = run_suites(cfg);
    std::string note;
    for (std::size_t i = 0; i < a.size() && note.empty(); ++i)
      if (a[i].to_json(false).dump() != b[i].to_json(false).dump()) note = a[i].suite;
    double t = seconds_since(t0);
    line("determinism", "two full runs with identical config give identical JSON (timing excluded)", note.empty(), t,
         600, note);
  }
  std::printf("%d criteria failed\n", n_fail);
  return ok ? 0 : 1;
}
