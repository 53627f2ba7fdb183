#include "doctest.h"
#include "eqs/affine.hpp"
#include "eqs/face.hpp"
#include "eqs/pbw.hpp"
#include "eqs/quasihopf.hpp"

using namespace eqs;

namespace {

RatFunc Q() { return RatFunc::sym(PbwSyms::get().q); }
RatFunc Z() { return RatFunc::sym(sym("z")); }
Mat kron(const Mat& a, const Mat& b) { return super_kron(a, b); }

// R_VV(z; theta, theta') entry by entry from its six-term display; s = sqrt([theta][theta']).
Mat r_display(const RatFunc& z, const RatFunc& q, int th, int th2, const RatFunc& s) {
  RatFunc one(1L), D = one - z * q.pow(-th - th2), qd = q - q.inv();
  return kron(eunit(1, 1), eunit(1, 1)).scaled((q.pow(-th - th2) - z) / D) + kron(eunit(2, 2), eunit(2, 2)) +
         kron(eunit(1, 1), eunit(2, 2)).scaled((q.pow(-th2) - z * q.pow(-th)) / D) +
         kron(eunit(2, 2), eunit(1, 1)).scaled((q.pow(-th) - z * q.pow(-th2)) / D) +
         kron(eunit(1, 2), eunit(2, 1)).scaled(s * q.pow(-th) * qd / D) -
         kron(eunit(2, 1), eunit(1, 2)).scaled(s * q.pow(-th2) * z * qd / D);
}

}  // namespace

TEST_CASE("Chevalley images at theta = 1") {
  auto c = eval_rep_chevalley(Q(), 1, Rat(0), Z(), RatFunc(1L));
  CHECK(c.e1 == eunit(1, 2));
  CHECK((c.h0 + c.h1).is_zero());
  for (const Mat* m : {&c.e1, &c.f1, &c.e0, &c.f0}) CHECK(m->parity() == 1);
}

TEST_CASE("Drinfeld images at theta = 1") {
  auto d0 = eval_rep_drinfeld(0, Q(), 1, Z(), RatFunc(1L));
  auto d1 = eval_rep_drinfeld(1, Q(), 1, Z(), RatFunc(1L));
  CHECK(d0.Xp == eunit(1, 2));
  CHECK(d1.H == (eunit(1, 1) + eunit(2, 2)).scaled(Z()));
  auto c = eval_rep_chevalley(Q(), 1, Rat(0), Z(), RatFunc(1L));
  // q^{-H_0} = q^{-1} on the module
  CHECK(c.e0 == d1.Xm.scaled(Q().inv()));
  // {X_0^+, X_0^-} = [H_0]_q = 1
  CHECK(d0.Xp * d0.Xm + d0.Xm * d0.Xp == eunit(1, 1) + eunit(2, 2));
}

TEST_CASE("Drinfeld relations hold for |n|, |m| <= 4") {
  for (int th : {1, 2}) {
    CAPTURE(th);
    for (const auto& r : verify_drinfeld_relations(4, Q(), th)) {
      CAPTURE(r.id);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("closed R_VV matches its display") {
  CHECK(r_matrix_vv(Z(), Q(), 1, 1, RatFunc(1L)) == r_display(Z(), Q(), 1, 1, RatFunc(1L)));
  RatFunc s = sqrt_theta(2, 1) * sqrt_theta(3, 2);
  CHECK(r_matrix_vv(Z(), Q(), 2, 3, s) == r_display(Z(), Q(), 2, 3, s));
  Mat r = r_matrix_vv(Z(), Q(), 1, 1, RatFunc(1L));
  RatFunc q = Q(), one(1L);
  CHECK(r(0, 0) == (q.pow(-2) - Z()) / (one - Z() * q.pow(-2)));
}

TEST_CASE("R_VV at z = 0") {
  RatFunc q = Q();
  Mat expect = kron(eunit(1, 1), eunit(1, 1)).scaled(q.pow(-2)) + kron(eunit(2, 2), eunit(2, 2)) +
               (kron(eunit(1, 1), eunit(2, 2)) + kron(eunit(2, 2), eunit(1, 1))).scaled(q.inv()) +
               kron(eunit(1, 2), eunit(2, 1)).scaled(q.inv() * (q - q.inv()));
  CHECK(r_matrix_vv(RatFunc(), q, 1, 1, RatFunc(1L)) == expect);
}

TEST_CASE("image of q^{T} is K") {
  RatFunc q = Q();
  Mat K = kron(eunit(1, 1), eunit(1, 1)).scaled(q * q) + kron(eunit(1, 1), eunit(2, 2)).scaled(q) +
          kron(eunit(2, 2), eunit(1, 1)).scaled(q) + kron(eunit(2, 2), eunit(2, 2));
  CHECK(k_matrix(q) == K);
  // pi (x) pi of q^{-T}
  CHECK(pi_image(TElem::G(2, 0, 1)) * K == Mat::identity(2, RatFunc()));
}

TEST_CASE("universal product equals the closed form to z^8") {
  for (const auto& r : verify_r_universal(Q(), 8, {{1, 1}, {1, 2}})) {
    CAPTURE(r.id);
    CHECK(r.ok());
  }
}

TEST_CASE("graded YBE") {
  RatFunc q{Rat(7, 5)};
  CHECK(ybe_residual(q, {Rat(2), Rat(3), Rat(5)}, {1, 1, 1}).is_zero());
  CHECK(ybe_residual(q, {Rat(2), Rat(2), Rat(5)}, {2, 2, 1}).is_zero());
  CHECK(ybe_residual(Q(), {Rat(2), Rat(3), Rat(5)}, {1, 2, 3}).is_zero());
  CHECK_FALSE(ybe_residual(q, {Rat(2), Rat(3), Rat(5)}, {1, 1, 1}, false).is_zero());
}
