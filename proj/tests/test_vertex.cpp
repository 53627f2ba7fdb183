#include "doctest.h"
#include "eqs/pbw.hpp"
#include "eqs/vertex.hpp"

using namespace eqs;

namespace {

RatFunc Q() { return RatFunc::sym(PbwSyms::get().q); }
RatFunc Z() { return RatFunc::sym(sym("z")); }

}  // namespace

TEST_CASE("tau on Drinfeld generators") {
  RatFunc z = Z(), one(1L);
  auto t0 = tau_drinfeld_image(0, Q(), z);
  CHECK(t0.Xp == eunit(2, 1, z));
  CHECK(t0.Xm == eunit(1, 2, -z.inv()));
  auto t1 = tau_drinfeld_image(1, Q(), z);
  CHECK(t1.H == (eunit(1, 1) + eunit(2, 2)).scaled(z * z));
  // printed assignment puts X^+ on e12
  VertexVariant printed;
  printed.printed_tau_x = true;
  CHECK(tau_drinfeld_image(0, Q(), z, printed).Xp == eunit(1, 2, z));
}

TEST_CASE("rho_1 closed form") {
  auto sh = vertex_shape(6, 6);
  Series h = Series::var(sh, "h"), zeta = Series::var(sh, "zeta"), one = Series::constant(sh, RatFunc(1L));
  RatFunc q = Q();
  Series pz2 = h * h * zeta * zeta;
  Series num = (one + pz2 * (q * q)) * (one + pz2 * q.pow(-2));
  Series den = (one + pz2) * (one + pz2);
  CHECK(rho_odd(1, q, h, zeta) * den == num);
}

TEST_CASE("factors and product at zeta = 0") {
  auto sh = vertex_shape(6, 4);
  Series h = Series::var(sh, "h"), zero(sh);
  SMat I = SMat::identity(2, zero);
  CHECK(ebar_even(1, Q(), h, zero) == I);
  CHECK(vertex_twistor_product(Q(), h, zero) == I);
  auto cf = vertex_closed_forms(Q(), h, zero);
  CHECK(cf.bE + cf.cE == Series::constant(sh, RatFunc(1L)));
}

TEST_CASE("odd factor carries p^{1/2} zeta on the odd-odd entries") {
  auto sh = vertex_shape(2, 2);
  Series h = Series::var(sh, "h"), zeta = Series::var(sh, "zeta");
  SMat E = ebar_odd(1, Q(), h, zeta);
  RatFunc qd = Q() - Q().inv();
  Series hz = h * zeta;
  // h^1 zeta^1 layer of Ebar_1 is +qd e12(x)e12 - qd e21(x)e21
  SMat layer(2, Series(sh));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) layer(i, j) = Series::monomial(sh, {1, 1}, E(i, j).coeff({1, 1}));
  Mat expect = super_kron(eunit(1, 2), eunit(1, 2)).scaled(qd) - super_kron(eunit(2, 1), eunit(2, 1)).scaled(qd);
  CHECK(layer == lift(expect, Series(sh)).scaled(hz));
}

TEST_CASE("product against closed forms, low orders") {
  for (const auto& r : verify_vertex_product(Q(), 4, 4, 6, 4)) {
    CAPTURE(r.id);
    CHECK(r.ok());
  }
}

TEST_CASE("difference equation, low orders") {
  for (const auto& r : verify_vertex_difference(Q(), 4, 4)) {
    CAPTURE(r.id);
    CHECK(r.ok());
  }
}

TEST_CASE("elliptic vertex YBE mod p^2") {
  for (const auto& r : verify_vertex_ybe(RatFunc(Rat(7, 5)), {Rat(2), Rat(5, 3), Rat(7)}, 3)) {
    CAPTURE(r.id);
    CHECK(r.ok());
  }
}
