#include "doctest.h"
#include "eqs/rootdata.hpp"

using namespace eqs;

namespace {

Weight w(std::initializer_list<int> v) {
  Weight r;
  for (int x : v) r.emplace_back(x);
  return r;
}

bool check_ok(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r.ok();
  FAIL("missing check " << id);
  return false;
}

}  // namespace

TEST_CASE("n = 1 roots and dual element") {
  RootDatum R = build_root_data(1, Rat(0));
  // coordinates (delta, eps_1, delta_1, d)
  CHECK(R.alpha[0] == w({1, -1, 1, 0}));
  CHECK(R.alpha[1] == w({0, 1, -1, 0}));
  Weight hex = {Rat(0), Rat(1, 2), Rat(-1, 2), Rat(0)};
  CHECK(R.hup_ex == hex);
  CHECK(form(R, R.h_ex, R.hup_ex) == 1);
  CHECK(form(R, R.d, R.c) == 1);
}

TEST_CASE("n = 2 roots sum to delta and pair with the dual basis") {
  RootDatum R = build_root_data(2, Rat(0));
  Weight s(static_cast<std::size_t>(R.dim()));
  for (const auto& a : R.alpha)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += a[i];
  CHECK(s == R.delta());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(form(R, R.alpha[static_cast<std::size_t>(i)], R.hup[static_cast<std::size_t>(j)]) == (i == j ? 1 : 0));
}

TEST_CASE("isotropic roots, principal pairing, tau fixes rho~") {
  for (int n = 1; n <= 3; ++n)
    for (int xi : {0, 1}) {
      CAPTURE(n);
      CAPTURE(xi);
      RootDatum R = build_root_data(n, Rat(xi));
      RMatrix tau = tau_matrix(R);
      for (const auto& a : R.alpha) {
        CHECK(form(R, a, a) == 0);
        CHECK(form(R, R.rho_tilde, a) == 1);
      }
      CHECK(act(tau, R.rho_tilde) == R.rho_tilde);
    }
}

TEST_CASE("n = 1: tau swaps h_0 and h_1, sum identity") {
  RootDatum R = build_root_data(1, Rat(0));
  RMatrix tau = tau_matrix(R);
  CHECK(act(tau, R.alpha[0]) == R.alpha[1]);
  CHECK(act(tau, R.alpha[1]) == R.alpha[0]);
  CHECK(sum_constant(R) == 0);
  auto rs = verify_root_data(1, Rat(0));
  CHECK(check_ok(rs, "n=1,xi=0:tau-tau-T"));
  CHECK(check_ok(rs, "n=1,xi=0:tau-sum-T"));
  CHECK(check_ok(rs, "n=1,xi=0:tau-sum-T-minus-Ttilde"));
}

TEST_CASE("n = 1, xi = 1: the sum identity needs +3xi in the c(x)c coefficient") {
  auto rs = verify_root_data(1, Rat(1));
  CHECK_FALSE(check_ok(rs, "n=1,xi=1:tau-sum-T"));
  CHECK(check_ok(rs, "n=1,xi=1:tau-sum-T-plus-3xi"));
}

TEST_CASE("n = 2: Cartan signs alternate, so tau cannot be an isometry") {
  RootDatum R = build_root_data(2, Rat(0));
  RMatrix A = cartan_matrix(R);
  CHECK(A[0][1] == -1);
  CHECK(A[1][2] == 1);
  CHECK(A[2][3] == -1);
  CHECK(A[3][0] == 1);
  auto rs = verify_root_data(2, Rat(0));
  CHECK_FALSE(check_ok(rs, "n=2,xi=0:tau-tau-T"));
  CHECK(check_ok(rs, "n=2,xi=0:tau-rho-tilde"));
  CHECK(check_ok(rs, "n=2,xi=0:dual-basis"));
}
