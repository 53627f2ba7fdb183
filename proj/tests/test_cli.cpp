#include "doctest.h"
#include "eqs/errors.hpp"
#include "eqs/suites.hpp"

using namespace eqs;

namespace {

SuiteConfig cfg(std::vector<std::string> suites) {
  SuiteConfig c;
  c.suites = std::move(suites);
  return c;
}

}  // namespace

TEST_CASE("configuration errors") {
  SuiteConfig c = cfg({"face-diff-eq"});
  c.order_p = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_THROWS_AS(validate(cfg({"no-such-suite"})), ConfigError);
  c = cfg({"face-dybe"});
  c.w_mode = "1";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = cfg({"graded-ybe"});
  c.q = "7/5,-1";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = cfg({"root-data"});
  CHECK_THROWS_AS(merge_config(c, json{{"bogus", 1}}), ConfigError);
}

TEST_CASE("config file values are merged") {
  SuiteConfig c = cfg({"root-data"});
  merge_config(c, json{{"suite", "graded-ybe,drinfeld"}, {"xi", {"1/2"}}, {"order_p", 3}, {"q", "7/5"}});
  CHECK(c.suites == std::vector<std::string>{"graded-ybe", "drinfeld"});
  CHECK(c.xi == std::vector<Rat>{Rat(1, 2)});
  CHECK(c.order_p == 3);
  CHECK(c.q == "7/5");
}

TEST_CASE("graded-ybe report: five theta = 1 samples pass") {
  SuiteConfig c = cfg({"graded-ybe"});
  c.q = "7/5";
  auto rep = run_suite("graded-ybe", c);
  CHECK(rep.ok());
  int pass = 0;
  for (const auto& r : rep.results) {
    if (r.expect_pass && r.id.find("theta=1,1,1") != std::string::npos) {
      ++pass;
      CHECK(r.witness.is_null());
    }
    if (!r.expect_pass) CHECK(r.witness.contains("row"));
  }
  CHECK(pass == 5);
}

TEST_CASE("identical config gives identical reports") {
  SuiteConfig c = cfg({"graded-ybe", "drinfeld", "face-dybe", "root-data"});
  c.workers = 3;
  auto a = run_suites(c);
  c.workers = 1;
  auto b = run_suites(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_json(false).dump() == b[i].to_json(false).dump());
}

TEST_CASE("term budget aborts loudly") {
  SuiteConfig c = cfg({"face-diff-eq"});
  c.term_budget = 5;
  auto rep = run_suite("face-diff-eq", c);
  CHECK_FALSE(rep.ok());
  CHECK(rep.results.front().error.rfind("resource limit", 0) == 0);
}

TEST_CASE("csv table header") {
  SuiteConfig c = cfg({"vertex-product-vs-closed"});
  c.order_p = 2;
  c.order_zeta = 2;
  std::string s = xij_csv(c);
  CHECK(s.rfind("# X11\np_half_order,zeta_order,num,den\n", 0) == 0);
}
